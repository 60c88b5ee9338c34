#include "canon/system_io.hpp"

#include "canon/error.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace canon {

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t next = line.find(' ', pos);
        if (next == std::string_view::npos) next = line.size();
        out.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
    if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

std::uint32_t parse_var(std::string_view tok, std::uint64_t n, int line) {
    std::uint64_t v = 0;
    if (tok.size() < 2 || tok[0] != 'x' || !parse_uint(tok.substr(1), v))
        throw ParseError("malformed variable '" + std::string(tok) + "'", line);
    if (v == 0 || v > n) throw ParseError("index out of range", line);
    return static_cast<std::uint32_t>(v);
}

}  // namespace

CanonicalSystem parse_system(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    CanonicalSystem sys;
    std::uint64_t n = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty() || raw[0] == '#') continue;
        auto tok = split_spaces(raw);
        if (!have_header) {
            if (tok.size() != 2 || tok[0] != "vars" || !parse_uint(tok[1], n) || n == 0)
                throw ParseError("expected 'vars <n>' header", line_no);
            sys = CanonicalSystem(n);
            have_header = true;
            continue;
        }
        if (tok.size() == 3 && tok[1] == "=" && tok[2] == "1") {
            sys.insert(CanonicalEquation::unit(parse_var(tok[0], n, line_no)));
        } else if (tok.size() == 5 && (tok[1] == "+" || tok[1] == "*") && tok[3] == "=") {
            auto i = parse_var(tok[0], n, line_no);
            auto j = parse_var(tok[2], n, line_no);
            auto k = parse_var(tok[4], n, line_no);
            sys.insert(tok[1] == "+" ? CanonicalEquation::add(i, j, k) : CanonicalEquation::mul(i, j, k));
        } else {
            throw ParseError("malformed equation '" + raw + "'", line_no);
        }
    }
    if (!have_header) throw ParseError("missing 'vars <n>' header", line_no);
    return sys;
}

std::string serialize_system(const CanonicalSystem& sys) {
    std::string out = "vars " + std::to_string(sys.arity()) + "\n";
    for (const auto& e : sys.equations()) out += e.str() + "\n";
    return out;
}

nlohmann::json system_to_json(const CanonicalSystem& sys) {
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : sys.equations()) {
        switch (e.kind) {
            case EqKind::Unit: eqs.push_back({"U", e.i}); break;
            case EqKind::Add: eqs.push_back({"A", e.i, e.j, e.k}); break;
            case EqKind::Mul: eqs.push_back({"M", e.i, e.j, e.k}); break;
        }
    }
    return {{"vars", sys.arity()}, {"equations", eqs}};
}

CanonicalSystem system_from_json(const nlohmann::json& j) {
    try {
        auto n = j.at("vars").get<std::size_t>();
        if (n == 0) throw ParseError("vars must be positive");
        CanonicalSystem sys(n);
        for (const auto& e : j.at("equations")) {
            auto tag = e.at(0).get<std::string>();
            auto idx = [&](std::size_t p) {
                auto v = e.at(p).get<std::int64_t>();
                if (v <= 0 || static_cast<std::uint64_t>(v) > n) throw ParseError("index out of range");
                return static_cast<std::uint32_t>(v);
            };
            if (tag == "U" && e.size() == 2) sys.insert(CanonicalEquation::unit(idx(1)));
            else if (tag == "A" && e.size() == 4) sys.insert(CanonicalEquation::add(idx(1), idx(2), idx(3)));
            else if (tag == "M" && e.size() == 4) sys.insert(CanonicalEquation::mul(idx(1), idx(2), idx(3)));
            else throw ParseError("malformed equation entry " + e.dump());
        }
        return sys;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed system json: ") + ex.what());
    }
}

}  // namespace canon
