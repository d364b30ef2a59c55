#include "cosetlab/ingest/slp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cosetlab/ingest/formats.hpp"

namespace cosetlab::ingest {

namespace {

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> w;
    std::string t;
    while (is >> t) w.push_back(t);
    return w;
}

}  // namespace

SLProgram parse_slp(const std::string& text) {
    SLProgram prog;
    std::set<std::string> defined;
    std::vector<std::string> implicit_inputs;
    bool explicit_inputs = false;
    auto read = [&](const std::string& r, std::size_t line) {
        if (defined.count(r)) return;
        if (explicit_inputs) throw ParseError("register '" + r + "' is read before it is written", line);
        implicit_inputs.push_back(r);
        defined.insert(r);
    };
    std::string flat = text;
    std::replace(flat.begin(), flat.end(), ';', '\n');
    for (const auto& [line, s] : content_lines(flat)) {
        auto w = words(s);
        const std::string& op = w[0];
        auto need = [&](std::size_t n) {
            if (w.size() != n + 1) throw ParseError("'" + op + "' takes " + std::to_string(n) + " operands", line);
        };
        SlpInstruction ins;
        ins.op = op;
        ins.line = line;
        if (op == "inp") {
            if (!prog.code.empty() || !implicit_inputs.empty() || explicit_inputs)
                throw ParseError("'inp' must come first", line);
            explicit_inputs = true;
            if (w.size() == 2 && std::all_of(w[1].begin(), w[1].end(), ::isdigit)) {
                // "inp 2" names the inputs 1 and 2
                for (int i = 1; i <= std::stoi(w[1]); ++i) prog.inputs.push_back(std::to_string(i));
            } else {
                prog.inputs.assign(w.begin() + 1, w.end());
            }
            defined.insert(prog.inputs.begin(), prog.inputs.end());
            continue;
        }
        if (op == "echo") continue;
        if (op == "oup") {
            if (w.size() < 2) throw ParseError("'oup' needs at least one register", line);
            std::size_t from = 1;
            // ATLAS style "oup 2 a b": a count followed by exactly that many registers
            if (w.size() > 2 && std::all_of(w[1].begin(), w[1].end(), ::isdigit) &&
                static_cast<std::size_t>(std::stoi(w[1])) == w.size() - 2)
                from = 2;
            for (std::size_t i = from; i < w.size(); ++i) {
                read(w[i], line);
                prog.outputs.push_back(w[i]);
            }
            continue;
        }
        if (op == "mu" || op == "cj" || op == "com") {
            need(3);
            read(w[1], line);
            read(w[2], line);
            ins.regs = {w[1], w[2], w[3]};
            defined.insert(w[3]);
        } else if (op == "iv" || op == "cp") {
            need(2);
            read(w[1], line);
            ins.regs = {w[1], w[2]};
            defined.insert(w[2]);
        } else if (op == "pwr") {
            need(3);
            try {
                std::size_t pos = 0;
                ins.exponent = std::stoll(w[1], &pos);
                if (pos != w[1].size()) throw std::invalid_argument(w[1]);
            } catch (const std::exception&) {
                throw ParseError("'pwr' exponent must be an integer", line);
            }
            read(w[2], line);
            ins.regs = {w[2], w[3]};
            defined.insert(w[3]);
        } else {
            throw ParseError("unknown instruction '" + op + "'", line);
        }
        prog.code.push_back(std::move(ins));
    }
    if (!explicit_inputs) prog.inputs = implicit_inputs;
    if (prog.outputs.empty()) throw ParseError("program has no 'oup' instruction", 0);
    return prog;
}

std::string serialize_slp(const SLProgram& prog) {
    std::ostringstream os;
    os << "inp";
    for (const auto& r : prog.inputs) os << ' ' << r;
    os << '\n';
    for (const auto& ins : prog.code) {
        os << ins.op;
        if (ins.op == "pwr") os << ' ' << ins.exponent;
        for (const auto& r : ins.regs) os << ' ' << r;
        os << '\n';
    }
    os << "oup";
    for (const auto& r : prog.outputs) os << ' ' << r;
    os << '\n';
    return os.str();
}

}  // namespace cosetlab::ingest
