#include "dirconv/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace dirconv {

namespace {

struct Header {
    std::map<std::string, std::string> fields;

    const std::string& need(const std::string& key) const {
        auto it = fields.find(key);
        if (it == fields.end()) throw ParseError("missing header field '" + key + "'");
        return it->second;
    }
    bool has(const std::string& key) const { return fields.count(key) != 0; }
};

Header read_header(std::istream& in, std::initializer_list<const char*> allowed) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) break;
        line.clear();
    }
    if (line.empty()) throw ParseError("missing header line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Header h;
    std::istringstream is(line);
    std::string token;
    while (is >> token) {
        std::size_t eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("bad header token '" + token + "'");
        std::string key = token.substr(0, eq);
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ParseError("unknown header field '" + key + "'");
        if (!h.fields.emplace(key, token.substr(eq + 1)).second)
            throw ParseError("duplicate header field '" + key + "'");
    }
    return h;
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size())
        throw ParseError(std::string("bad ") + what + " '" + s + "'");
    return v;
}

// Splits a record line into the index token and the value text.
bool next_record(std::istream& in, std::string& index, std::string& rest) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::size_t space = line.find(' ', start);
        if (space == std::string::npos) throw ParseError("bad record line '" + line + "'");
        index = line.substr(start, space - start);
        rest = line.substr(space + 1);
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.pop_back();
        if (rest.empty()) throw ParseError("bad record line '" + line + "'");
        return true;
    }
    return false;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string piece =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        char* end = nullptr;
        long v = std::strtol(piece.c_str(), &end, 10);
        if (piece.empty() || end != piece.c_str() + piece.size())
            throw ParseError(std::string("bad ") + what + " '" + s + "'");
        out.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

char vector_separator(const Ring& ring) {
    return ring.kind() == RingKind::Poly ? ';' : ',';
}

// A record that parses but cannot be applied (outside the monoid, beyond
// the bound, wrong rank or shape) is still a malformed file.
template <typename F>
void apply_record(const std::string& index, F&& apply) {
    try {
        apply();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError("record " + index + ": " + e.what());
    }
}

}  // namespace

ArithFunction read_fn(std::istream& in) {
    Header h = read_header(in, {"monoid", "ring", "bound"});
    MonoidSpec spec = MonoidSpec::parse(h.need("monoid"));
    Ring ring = Ring::parse_name(h.need("ring"));
    ArithFunction f(spec, ring, parse_uint(h.need("bound"), "bound"));
    std::string index, rest;
    std::set<std::uint64_t> seen;
    while (next_record(in, index, rest)) {
        std::uint64_t n = parse_uint(index, "index");
        if (!seen.insert(n).second)
            throw ParseError("duplicate record for " + std::to_string(n));
        apply_record(index, [&] { f.set(n, ring.parse(rest)); });
    }
    return f;
}

void write_fn(std::ostream& out, const ArithFunction& f) {
    out << "monoid=" << f.spec().syntax() << " ring=" << f.ring().name()
        << " bound=" << f.bound() << "\n";
    for (const auto& [n, v] : f.support()) out << n << " " << v.str() << "\n";
}

ModuleFunction read_mfn(std::istream& in) {
    Header h = read_header(in, {"monoid", "ring", "bound", "rank"});
    MonoidSpec spec = MonoidSpec::parse(h.need("monoid"));
    Ring ring = Ring::parse_name(h.need("ring"));
    int rank = static_cast<int>(parse_uint(h.need("rank"), "rank"));
    ModuleFunction f(spec, ring, rank, parse_uint(h.need("bound"), "bound"));
    char sep = vector_separator(ring);
    std::string index, rest;
    std::set<std::uint64_t> seen;
    while (next_record(in, index, rest)) {
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
            throw ParseError("bad vector value '" + rest + "'");
        std::string body = rest.substr(1, rest.size() - 2);
        std::vector<Value> v;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t cut = body.find(sep, pos);
            v.push_back(ring.parse(
                body.substr(pos, cut == std::string::npos ? std::string::npos : cut - pos)));
            if (cut == std::string::npos) break;
            pos = cut + 1;
        }
        std::uint64_t n = parse_uint(index, "index");
        if (!seen.insert(n).second)
            throw ParseError("duplicate record for " + std::to_string(n));
        apply_record(index, [&] { f.set(n, std::move(v)); });
    }
    return f;
}

void write_mfn(std::ostream& out, const ModuleFunction& f) {
    out << "monoid=" << f.spec().syntax() << " ring=" << f.ring().name()
        << " bound=" << f.bound() << " rank=" << f.rank() << "\n";
    char sep = vector_separator(f.ring());
    for (const auto& [n, v] : f.support()) {
        out << n << " [";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << sep;
            out << v[i].str();
        }
        out << "]\n";
    }
}

ExtFunction read_efn(std::istream& in) {
    Header h = read_header(in, {"monoid", "ring", "bound", "denominator"});
    MonoidSpec spec = MonoidSpec::parse(h.need("monoid"));
    Ring ring = Ring::parse_name(h.need("ring"));
    ArithFunction core(spec, ring, parse_uint(h.need("bound"), "bound"));
    std::uint64_t d = parse_uint(h.need("denominator"), "denominator");
    std::string index, rest;
    std::set<std::uint64_t> seen;
    while (next_record(in, index, rest)) {
        std::uint64_t n = parse_uint(index, "index");
        if (!seen.insert(n).second)
            throw ParseError("duplicate record for " + std::to_string(n));
        apply_record(index, [&] { core.set(n, ring.parse(rest)); });
    }
    std::optional<ExtFunction> out;
    apply_record("denominator", [&] { out.emplace(d, std::move(core)); });
    return std::move(*out);
}

void write_efn(std::ostream& out, const ExtFunction& f) {
    out << "monoid=" << f.spec().syntax() << " ring=" << f.ring().name()
        << " bound=" << f.bound() << " denominator=" << f.denominator() << "\n";
    for (const auto& [n, v] : f.core().support()) out << n << " " << v.str() << "\n";
}

TruncatedSeries read_series(std::istream& in) {
    Header h = read_header(in, {"ring", "caps"});
    Ring ring = Ring::parse_name(h.need("ring"));
    TruncatedSeries s(ring, parse_int_list(h.need("caps"), "caps"));
    std::string index, rest;
    std::set<std::vector<int>> seen;
    while (next_record(in, index, rest)) {
        std::vector<int> e = parse_int_list(index, "exponent vector");
        if (!seen.insert(e).second) throw ParseError("duplicate record for '" + index + "'");
        apply_record(index, [&] { s.set_coeff(e, ring.parse(rest)); });
    }
    return s;
}

void write_series(std::ostream& out, const TruncatedSeries& s) {
    out << "ring=" << s.ring().name() << " caps=" << join_ints(s.degree_caps()) << "\n";
    for (const auto& [e, v] : s.coefficients()) out << join_ints(e) << " " << v.str() << "\n";
}

LaurentSeries read_laurent(std::istream& in) {
    Header h = read_header(in, {"ring", "caps", "shift"});
    Ring ring = Ring::parse_name(h.need("ring"));
    TruncatedSeries body(ring, parse_int_list(h.need("caps"), "caps"));
    std::vector<int> shift = parse_int_list(h.need("shift"), "shift");
    std::string index, rest;
    std::set<std::vector<int>> seen;
    while (next_record(in, index, rest)) {
        std::vector<int> e = parse_int_list(index, "exponent vector");
        if (!seen.insert(e).second) throw ParseError("duplicate record for '" + index + "'");
        apply_record(index, [&] { body.set_coeff(e, ring.parse(rest)); });
    }
    std::optional<LaurentSeries> out;
    apply_record("shift", [&] { out.emplace(std::move(shift), std::move(body)); });
    return std::move(*out);
}

void write_laurent(std::ostream& out, const LaurentSeries& s) {
    out << "ring=" << s.ring().name() << " caps=" << join_ints(s.body().degree_caps())
        << " shift=" << join_ints(s.shift()) << "\n";
    for (const auto& [e, v] : s.body().coefficients()) out << join_ints(e) << " " << v.str() << "\n";
}

namespace {

template <typename Reader>
auto load_with_context(const std::string& path, const Reader& reader) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    try {
        return reader(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + std::string(e.what()).substr(std::string("parse error: ").size()));
    } catch (const Error& e) {
        throw;
    }
}

}  // namespace

ArithFunction load_fn(const std::string& path) {
    return load_with_context(path, [](std::istream& in) { return read_fn(in); });
}
ModuleFunction load_mfn(const std::string& path) {
    return load_with_context(path, [](std::istream& in) { return read_mfn(in); });
}
ExtFunction load_efn(const std::string& path) {
    return load_with_context(path, [](std::istream& in) { return read_efn(in); });
}
TruncatedSeries load_series(const std::string& path) {
    return load_with_context(path, [](std::istream& in) { return read_series(in); });
}
LaurentSeries load_laurent(const std::string& path) {
    return load_with_context(path, [](std::istream& in) { return read_laurent(in); });
}

std::string format_fn(const ArithFunction& f) {
    std::ostringstream os;
    write_fn(os, f);
    return os.str();
}
std::string format_mfn(const ModuleFunction& f) {
    std::ostringstream os;
    write_mfn(os, f);
    return os.str();
}
std::string format_efn(const ExtFunction& f) {
    std::ostringstream os;
    write_efn(os, f);
    return os.str();
}
std::string format_series(const TruncatedSeries& s) {
    std::ostringstream os;
    write_series(os, s);
    return os.str();
}
std::string format_laurent(const LaurentSeries& s) {
    std::ostringstream os;
    write_laurent(os, s);
    return os.str();
}

void save_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open file for writing");
    out << content;
    if (!out) throw Error(path + ": write failed");
}

}  // namespace dirconv
