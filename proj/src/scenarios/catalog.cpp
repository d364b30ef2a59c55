#include "cosetlab/scenarios/catalog.hpp"

#include <set>

#include "cosetlab/error.hpp"

namespace cosetlab::scenarios {

namespace {

// One scenario file per entry, in the same grammar users write.
const char* const kSources[] = {
    R"toml(id = "s8_transvection_polarity_orbits"
topic = "pairs (transvection, graph involution) in SL4(2).2 = S8"
[group]
name = "PGLext"
n = 4
q = 2
[elements.tv]
kind = "transvection"
[elements.pol]
kind = "polarity"
form = "symplectic"
[[checks]]
kind = "class_size_eq"
x = "tv"
expected = 105
[[checks]]
kind = "class_size_eq"
x = "pol"
expected = 28
[[checks]]
kind = "orbit_count_eq"
x = "tv"
d = "pol"
expected = 2
)toml",
    R"toml(id = "ex3_3_go8"
topic = "transvections times alternating involutions in GO8+(2)"
[group]
name = "GOplus"
n = 8
q = 2
[elements.tv]
kind = "transvection"
[elements.a2]
kind = "alt_involution"
rank = 2
[elements.a4]
kind = "alt_involution"
rank = 4
# the census of square-zero isometries gives 1575 and 7560, so a2 and a4
# are the only alternating involution classes
[[checks]]
kind = "class_size_eq"
x = "tv"
expected = 120
[[checks]]
kind = "class_size_eq"
x = "a2"
expected = 1575
[[checks]]
kind = "class_size_eq"
x = "a4"
expected = 7560
[[checks]]
kind = "product_orders_subset"
c = "tv"
d = "a2,a4"
expected = [2, 4]
)toml",
    R"toml(id = "pgl27_unipotent_outer_eliminations"
topic = "inner unipotent times outer 2-element classes in SL3(2).2"
[group]
name = "PGLext"
n = 3
q = 2
[[checks]]
kind = "contains_non_p_element"
c = "@inner_p"
d = "@outer_p"
)toml",
    R"toml(id = "s8_unipotent_outer_eliminations"
topic = "inner unipotent times outer 2-element classes in SL4(2).2"
[group]
name = "PGLext"
n = 4
q = 2
[elements.tv]
kind = "transvection"
[elements.pol]
kind = "polarity"
form = "symplectic"
[[checks]]
kind = "all_p_elements"
c = "tv"
d = "pol"
[[checks]]
kind = "contains_non_p_element"
c = "@inner_p"
d = "@outer_p"
except = "tv:pol"
)toml",
    R"toml(id = "go8_2_order4_outer_transvection_scan"
topic = "inner order-4 elements against outer transvections in GO8+(2)"
[group]
name = "GOplus"
n = 8
q = 2
[elements.tv]
kind = "transvection"
[[checks]]
kind = "contains_non_p_element"
method = "gf2_scan"
c = "tv"
coset = "inner"
order = 4
)toml",
    R"toml(id = "sl4_3_pseudoreflection_graph_orbit"
topic = "pseudoreflection and graph involution classes in SL4(3).2"
[group]
name = "PGLext"
n = 4
q = 3
[elements.x]
kind = "pseudoreflection"
eigenvalue = 2
[elements.y]
kind = "polarity"
form = "symplectic"
[[checks]]
kind = "class_size_eq"
x = "x"
expected = 1080
[[checks]]
kind = "class_size_eq"
x = "y"
expected = 234
[[checks]]
kind = "orbit_count_eq"
x = "x"
d = "y"
expected = 1
)toml",
    R"toml(id = "go8_3_gl4_involution_reflection_orbit"
topic = "involution with GL4-type centralizer and reflections in GO8+(3)"
[group]
name = "GOplus"
n = 8
q = 3
[elements.x]
kind = "gl_centralizer"
[elements.y]
kind = "reflection"
norm = 1
[[checks]]
kind = "class_size_eq"
x = "y"
expected = 1080
[[checks]]
kind = "orbit_count_eq"
x = "x"
d = "y"
expected = 1
)toml",
    R"toml(id = "prop6_1_go6_q2"
topic = "centralizer orbits on nonsingular vectors in GO6+(2)"
[group]
name = "GOplus"
n = 6
q = 2
[elements.x]
kind = "unipotent"
jordan = "2^2.1^2"
[[checks]]
kind = "orbit_lengths_eq"
x = "x"
set = "vectors_of_norm"
norm = 1
expected = [4, 24]
)toml",
    R"toml(id = "go6_3_nonsingular_orbits"
topic = "centralizer orbits on vectors of norm 1 in GO6+(3)"
[group]
name = "GOplus"
n = 6
q = 3
[elements.x]
kind = "unipotent"
jordan = "2^2.1^2"
[[checks]]
kind = "orbit_lengths_eq"
x = "x"
set = "vectors_of_norm"
norm = 1
expected = [18, 216]
)toml",
    R"toml(id = "go4_2_nonsingular_single_orbit"
topic = "centralizer orbits on nonsingular vectors in GO4+(2)"
[group]
name = "GOplus"
n = 4
q = 2
[elements.x]
kind = "unipotent"
jordan = "2^2"
[[checks]]
kind = "orbit_count_eq"
x = "x"
set = "vectors_of_norm"
norm = 1
expected = 1
)toml",
    R"toml(id = "go4_3_nonsingular_single_orbit"
topic = "centralizer orbits on vectors of norm 1 in GO4+(3)"
[group]
name = "GOplus"
n = 4
q = 3
[elements.x]
kind = "unipotent"
jordan = "2^2"
[[checks]]
kind = "orbit_count_eq"
x = "x"
set = "vectors_of_norm"
norm = 1
expected = 1
)toml",
    R"toml(id = "sp4_2_vector_orbit_bound"
topic = "centralizer orbits of alternating involutions on nonzero vectors of Sp4(2)"
[group]
name = "Sp"
n = 4
q = 2
[elements.a2]
kind = "alt_involution"
rank = 2
[[checks]]
kind = "class_size_eq"
x = "a2"
expected = 15
[[checks]]
kind = "class_rows_leq"
x = "a2"
set = "vectors_nonzero"
expected = 3
)toml",
    R"toml(id = "sp6_2_vector_orbit_bound"
topic = "centralizer orbits of alternating involutions on nonzero vectors of Sp6(2)"
[group]
name = "Sp"
n = 6
q = 2
[elements.a2]
kind = "alt_involution"
rank = 2
[[checks]]
kind = "class_size_eq"
x = "a2"
expected = 315
[[checks]]
kind = "class_rows_leq"
x = "a2"
set = "vectors_nonzero"
expected = 3
)toml",
    R"toml(id = "sp8_2_vector_orbit_bound"
topic = "centralizer orbits of alternating involutions on nonzero vectors of Sp8(2)"
[group]
name = "Sp"
n = 8
q = 2
[elements.a2]
kind = "alt_involution"
rank = 2
[elements.a4]
kind = "alt_involution"
rank = 4
[[checks]]
kind = "class_size_eq"
x = "a2"
expected = 5355
[[checks]]
kind = "class_size_eq"
x = "a4"
expected = 64260
[[checks]]
kind = "class_rows_leq"
x = "a2,a4"
set = "vectors_nonzero"
expected = 3
)toml",
    R"toml(id = "so5_3_nondegenerate_orbit_bound"
topic = "centralizer orbits on nondegenerate 1-spaces of SO5(3)"
[group]
name = "SO"
n = 5
q = 3
[elements.id]
kind = "identity"
[elements.u]
kind = "unipotent"
jordan = "2^2.1"
[[checks]]
kind = "class_size_eq"
x = "u"
expected = 80
[[checks]]
kind = "class_rows_leq"
x = "id,u"
set = "nondegenerate_one_spaces"
split = "norm"
expected = 3
)toml",
    R"toml(id = "so7_3_nondegenerate_orbit_bound"
topic = "centralizer orbits on nondegenerate 1-spaces of SO7(3)"
[group]
name = "SO"
n = 7
q = 3
[elements.id]
kind = "identity"
[elements.u]
kind = "unipotent"
jordan = "2^2.1^3"
[[checks]]
kind = "class_size_eq"
x = "u"
expected = 7280
[[checks]]
kind = "class_rows_leq"
x = "id,u"
set = "nondegenerate_one_spaces"
split = "norm"
expected = 3
)toml",
    R"toml(id = "go8_2_outer_jordan_census"
topic = "Jordan types of 2-elements in the outer coset of GO8+(2)"
[group]
name = "GOplus"
n = 8
q = 2
[[checks]]
kind = "jordan_census_eq"
coset = "outer"
# 2.1^6, 2^3.1^2, 4.1^4, 3^2.2, 4.2^2, 6.1^2, 8
expected = [2111111, 22211, 41111, 332, 422, 611, 8]
samples = 3
class_cap = 2000000
)toml",
    R"toml(id = "sl3_2_commutator_transvection_flags"
topic = "pairs with commutator a transvection in SL3(2) share a complete flag"
[group]
name = "SL"
n = 3
q = 2
[elements.tv]
kind = "transvection"
[[checks]]
kind = "common_flag_for_all_witnesses"
target = "tv"
# flags over GF(2) alone fail for 1344 of the 1848 pairs; the Borel subgroup
# lives in the algebraic group
field = "closure"
)toml",
    R"toml(id = "commutator_non_p_sl2_3"
topic = "commutators of a noncentral p-class with itself in SL2(3)"
[group]
name = "SL"
n = 2
q = 3
[[checks]]
kind = "contains_non_p_element"
mode = "commutator"
c = "@noncentral_p"
pairs = "diagonal"
)toml",
    R"toml(id = "commutator_non_p_sl3_2"
topic = "commutators of a noncentral p-class with itself in SL3(2)"
[group]
name = "SL"
n = 3
q = 2
[[checks]]
kind = "contains_non_p_element"
mode = "commutator"
c = "@noncentral_p"
pairs = "diagonal"
)toml",
    R"toml(id = "commutator_non_p_sp4_2"
topic = "commutators of a noncentral p-class with itself in Sp4(2)"
[group]
name = "Sp"
n = 4
q = 2
[[checks]]
kind = "contains_non_p_element"
mode = "commutator"
c = "@noncentral_p"
pairs = "diagonal"
)toml",
    R"toml(id = "commutator_non_p_go6_2"
topic = "commutators of a noncentral p-class with itself in GO6+(2)"
[group]
name = "GOplus"
n = 6
q = 2
[[checks]]
kind = "contains_non_p_element"
mode = "commutator"
c = "@noncentral_p"
pairs = "diagonal"
)toml",
    R"toml(id = "commutator_non_p_sp4_3"
topic = "commutators of a noncentral p-class with itself in Sp4(3)"
[group]
name = "Sp"
n = 4
q = 3
[[checks]]
kind = "contains_non_p_element"
mode = "commutator"
c = "@noncentral_p"
pairs = "diagonal"
)toml",
    R"toml(id = "sl2_wreath_class_growth"
topic = "classes met by a base class times the swap coset in SL2(q) wr 2"
[group]
name = "SL2wr2"
q = 3
[elements.c1]
kind = "pair"
a = "transvection"
b = "transvection"
[elements.c2]
kind = "swap"
[[checks]]
kind = "class_count_monotone_in_q"
c = "c1"
d = "c2"
qs = [3, 5, 7]
)toml",
    R"toml(id = "prop6_2_g2_in_d4"
topic = "orbits of G2(2) on long root elements of D4(2)"
requires = "d4_2_s3_3510.txt d4_2_s3_words.slp"
[group]
file = "d4_2_s3_3510.txt"
order = 1045094400
[elements.h1]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 1
[elements.h2]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 2
[elements.r]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 3
[[checks]]
kind = "orbit_lengths_eq"
subgroup = "h1,h2"
d = "r"
expected = [63, 252, 252, 252, 756]
)toml",
    R"toml(id = "triality_centralizer_orbit_counts"
topic = "centralizer orbit counts for triality cosets in D4(2).S3"
requires = "d4_2_s3_3510.txt d4_2_s3_words.slp"
[group]
file = "d4_2_s3_3510.txt"
order = 1045094400
[elements.x2]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 4
[elements.d2]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 5
[elements.x3]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 6
[elements.d3a]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 7
[elements.d3b]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 8
[elements.d3c]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 9
[[checks]]
kind = "orbit_count_eq"
x = "x2"
d = "d2"
expected = 2
on_mismatch = "warn"
[[checks]]
kind = "orbit_count_eq"
x = "x3"
d = "d3a"
expected = 2
on_mismatch = "warn"
[[checks]]
kind = "orbit_count_eq"
x = "x3"
d = "d3b"
expected = 3
on_mismatch = "warn"
[[checks]]
kind = "orbit_count_eq"
x = "x3"
d = "d3c"
expected = 2
on_mismatch = "warn"
)toml",
    R"toml(id = "triality_reflection_commutators"
topic = "commutators of a triality element with a reflection class in D4(2).S3"
requires = "d4_2_s3_3510.txt d4_2_s3_words.slp"
[group]
file = "d4_2_s3_3510.txt"
order = 1045094400
[elements.t]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 10
[elements.s]
kind = "slp"
program_file = "d4_2_s3_words.slp"
output = 11
[[checks]]
kind = "class_rows_leq"
of = "commutator"
x = "t"
d = "s"
expected = 1
)toml",
    R"toml(id = "triality_char3_products"
topic = "products of two outer order-3 classes in SO8+(3).3"
requires = "o8p3_3.txt o8p3_3_words.slp"
[group]
file = "o8p3_3.txt"
p = 3
[elements.c1]
kind = "slp"
program_file = "o8p3_3_words.slp"
output = 1
[[checks]]
kind = "all_p_elements"
c = "c1"
d = "c1"
p = 3
)toml",
};

}  // namespace

const std::vector<ScenarioSpec>& builtin_catalog() {
    static const std::vector<ScenarioSpec> catalog = [] {
        std::vector<ScenarioSpec> v;
        std::set<std::string> ids;
        for (const char* src : kSources) {
            auto s = parse_scenario(src);
            validate(s);
            if (!ids.insert(s.id).second) throw Error("duplicate built-in scenario id " + s.id);
            v.push_back(std::move(s));
        }
        return v;
    }();
    return catalog;
}

std::string builtin_source(const std::string& id) {
    for (const char* src : kSources)
        if (parse_scenario(src).id == id) return src;
    throw Error("no built-in scenario '" + id + "'");
}

}  // namespace cosetlab::scenarios
