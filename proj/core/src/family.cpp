#include "pf/family.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "pf/errors.hpp"
#include "pf/expr_parser.hpp"

namespace pf {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
    FamilySpec spec;
    bool have_dim = false, have_vars = false, have_poly = false;
    std::string poly_text;
    int poly_line = 0;

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string l = trim(line);
        if (l.empty() || l[0] == '#') continue;
        size_t colon = l.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value'", lineno, 1);
        std::string key = trim(l.substr(0, colon));
        std::string value = trim(l.substr(colon + 1));
        if (key == "name") {
            spec.name = value;
        } else if (key == "ambient_dim") {
            try {
                spec.n = std::stoi(value);
            } catch (const std::exception&) {
                throw ParseError("ambient_dim must be an integer", lineno, static_cast<int>(colon) + 2);
            }
            have_dim = true;
        } else if (key == "variables") {
            spec.variables = split_words(value);
            have_vars = true;
        } else if (key == "parameter") {
            spec.parameter = value;
        } else if (key == "polynomial") {
            poly_text = value;
            poly_line = lineno;
            have_poly = true;
        } else if (key == "constant") {
            if (value == "true")
                spec.constant_family = true;
            else if (value == "false")
                spec.constant_family = false;
            else
                throw ParseError("constant must be true or false", lineno, static_cast<int>(colon) + 2);
        } else if (key == "oracle") {
            spec.oracle = value;
        } else {
            throw FamilyError("unknown family key '" + key + "'");
        }
    }

    if (spec.name.empty()) throw FamilyError("missing family key 'name'");
    if (!have_dim) throw FamilyError("missing family key 'ambient_dim'");
    if (!have_vars) throw FamilyError("missing family key 'variables'");
    if (!have_poly) throw FamilyError("missing family key 'polynomial'");

    if (spec.n < 2)
        throw FamilyError("ambient_dim must be at least 2 (curves in the projective plane)");
    if (static_cast<int>(spec.variables.size()) != spec.n + 1)
        throw FamilyError("expected " + std::to_string(spec.n + 1) + " variables, got " +
                          std::to_string(spec.variables.size()));
    std::set<std::string> seen;
    for (const auto& v : spec.variables) {
        if (v.empty() || !seen.insert(v).second || v == spec.parameter)
            throw FamilyError("variable names must be distinct and differ from the parameter");
    }

    try {
        spec.f = parse_polynomial(poly_text, spec.variables, spec.parameter);
    } catch (const ParseError& e) {
        // Re-anchor the column-accurate message at the file line.
        throw ParseError(std::string("polynomial: ") + e.what(), poly_line, 0);
    }
    return spec;
}

FamilySpec load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FamilyError("cannot open family file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family(buf.str());
}

void validate_family(const FamilySpec& spec) {
    const int m = spec.degree();
    if (m < 2) throw FamilyError("family polynomial must have degree at least 2");
    if (m != spec.nvars())
        throw UnsupportedError(
            "this engine handles families with degree equal to the coordinate count "
            "(degree " +
            std::to_string(m) + ", coordinates " + std::to_string(spec.nvars()) + ")");
    bool depends = !spec.f.deriv_param().is_zero();
    if (spec.constant_family && depends)
        throw FamilyError("family flagged constant but the polynomial depends on the parameter");
    if (!spec.constant_family && !depends)
        throw FamilyError(
            "family polynomial does not depend on the parameter (flag it 'constant: true' if "
            "intended)");
}

}  // namespace pf
