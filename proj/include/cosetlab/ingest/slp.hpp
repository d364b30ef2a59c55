#pragma once

#include <map>
#include <string>
#include <vector>

#include "cosetlab/error.hpp"

namespace cosetlab::ingest {

// Straight-line program over named registers. Instructions, one per line or
// separated by ';':
//   inp a b ...    bind the inputs to registers (in order)
//   mu a b c       c = a * b
//   iv a b         b = a^-1
//   pwr k a b      b = a^k   (k may be 0 or negative)
//   cp a b         b = a
//   cj a b c       c = b^-1 a b
//   com a b c      c = a^-1 b^-1 a b
//   oup a b ...    output registers
// Without inp, the inputs bind to the registers read before they are written,
// in order of first appearance.
struct SlpInstruction {
    std::string op;
    std::vector<std::string> regs;
    long long exponent = 0;
    std::size_t line = 0;
};

struct SLProgram {
    std::vector<std::string> inputs;
    std::vector<SlpInstruction> code;
    std::vector<std::string> outputs;
};

SLProgram parse_slp(const std::string& text);
std::string serialize_slp(const SLProgram& prog);

// mul(a, b), inv(a), id() supply the group operations.
template <class E, class Mul, class Inv, class Id>
std::vector<E> eval_slp(const SLProgram& prog, const std::vector<E>& inputs, Mul mul, Inv inv, Id id) {
    if (inputs.size() != prog.inputs.size())
        throw Error("SLP expects " + std::to_string(prog.inputs.size()) + " inputs, got " +
                    std::to_string(inputs.size()));
    std::map<std::string, E> reg;
    for (std::size_t i = 0; i < inputs.size(); ++i) reg[prog.inputs[i]] = inputs[i];
    auto get = [&](const std::string& r, std::size_t line) -> const E& {
        auto it = reg.find(r);
        if (it == reg.end()) throw ParseError("undefined register '" + r + "'", line);
        return it->second;
    };
    auto power = [&](const E& g, long long k) {
        E base = k < 0 ? inv(g) : g;
        unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
        E acc = id();
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    };
    for (const auto& ins : prog.code) {
        const auto& r = ins.regs;
        if (ins.op == "mu") {
            E v = mul(get(r[0], ins.line), get(r[1], ins.line));
            reg[r[2]] = std::move(v);
        } else if (ins.op == "iv") {
            E v = inv(get(r[0], ins.line));
            reg[r[1]] = std::move(v);
        } else if (ins.op == "pwr") {
            E v = power(get(r[0], ins.line), ins.exponent);
            reg[r[1]] = std::move(v);
        } else if (ins.op == "cp") {
            E v = get(r[0], ins.line);
            reg[r[1]] = std::move(v);
        } else if (ins.op == "cj") {
            const E& b = get(r[1], ins.line);
            E v = mul(mul(inv(b), get(r[0], ins.line)), b);
            reg[r[2]] = std::move(v);
        } else if (ins.op == "com") {
            const E& a = get(r[0], ins.line);
            const E& b = get(r[1], ins.line);
            E v = mul(mul(inv(a), inv(b)), mul(a, b));
            reg[r[2]] = std::move(v);
        }
    }
    std::vector<E> out;
    for (const auto& o : prog.outputs) out.push_back(get(o, 0));
    return out;
}

}  // namespace cosetlab::ingest
