// dirconv: command-line front end for the Dirichlet-convolution library.
// Exit codes: 0 success, 1 parse/usage errors, 2 semantic errors.

#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dirconv/io.hpp"
#include "dirconv/selftest.hpp"
#include "dirconv/series_eval.hpp"

namespace {

using namespace dirconv;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        save_text(out_path, content);
}

std::string format_complex_number(std::complex<double> z) {
    Ring c = Ring::complex_floats();
    return c.format(c.from_complex(z));
}

int check_file(const std::string& path) {
    int failures = 0;
    auto report = [&](const std::string& name, bool pass) {
        std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
        if (!pass) ++failures;
    };
    if (ends_with(path, ".mfn")) {
        auto f = load_mfn(path);
        std::istringstream reparse(format_mfn(f));
        report("write-parse-round-trip", format_mfn(read_mfn(reparse)) == format_mfn(f));
        auto e = fn_unit(f.spec(), f.ring(), f.bound());
        report("unit-action", mod_action(e, f) == f);
        report("additive-inverse",
               mod_add(f, mod_neg(f)) == ModuleFunction(f.spec(), f.ring(), f.rank(), f.bound()));
    } else if (ends_with(path, ".efn")) {
        auto f = load_efn(path);
        std::istringstream reparse(format_efn(f));
        report("write-parse-round-trip", format_efn(read_efn(reparse)) == format_efn(f));
        report("canonical-form-certain", f.canonical_certain());
        auto e = ext_embed(fn_unit(f.spec(), f.ring(), f.bound()));
        report("unit-convolution", ext_convolve(e, f) == f);
        report("additive-inverse",
               ext_add(f, ext_neg(f)) ==
                   ext_embed(ArithFunction(f.spec(), f.ring(), f.bound())));
    } else if (ends_with(path, ".lser")) {
        auto s = load_laurent(path);
        std::istringstream reparse(format_laurent(s));
        report("write-parse-round-trip", format_laurent(read_laurent(reparse)) == format_laurent(s));
        report("decode-encode-round-trip",
               laurent_encode(laurent_decode(s), s.body().degree_caps()).series == s);
    } else if (ends_with(path, ".ser")) {
        auto s = load_series(path);
        std::istringstream reparse(format_series(s));
        report("write-parse-round-trip", format_series(read_series(reparse)) == format_series(s));
        report("unit-product", series_mul(s, TruncatedSeries::one(s.ring(), s.degree_caps())) == s);
        report("decode-encode-round-trip",
               iso_encode(iso_decode(s), s.degree_caps()).series == s);
    } else {
        auto f = load_fn(path);
        std::istringstream reparse(format_fn(f));
        report("write-parse-round-trip", format_fn(read_fn(reparse)) == format_fn(f));
        auto e = fn_unit(f.spec(), f.ring(), f.bound());
        report("unit-convolution", fn_convolve(e, f) == f);
        report("additive-inverse",
               fn_add(f, fn_neg(f)) == ArithFunction(f.spec(), f.ring(), f.bound()));
        if (ring_inverse(f.at(1))) {
            auto inv = fn_invert(f);
            report("inverse-round-trip", fn_convolve(f, inv) == e && fn_invert(inv) == f);
        }
    }
    return failures == 0 ? 0 : 2;
}

int run(int argc, char** argv) {
    CLI::App app{"Dirichlet convolution algebra on submonoids of the positive integers"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    app.add_option("--out", out_path, "Write output to this file instead of stdout")
        ->configurable(false);

    std::string file_a, file_b, char_file, delta_file, kind, caps_text;
    std::string monoid_text = "nstar", ring_text = "Q";
    std::uint64_t bound = 1024, prime = 2;
    std::vector<std::string> z_texts;
    bool check_derivative = false;

    auto* convolve = app.add_subcommand("convolve", "Dirichlet convolution of two functions");
    convolve->add_option("f", file_a)->required();
    convolve->add_option("g", file_b)->required();

    auto* add = app.add_subcommand("add", "Pointwise sum of two functions");
    add->add_option("f", file_a)->required();
    add->add_option("g", file_b)->required();

    auto* invert = app.add_subcommand("invert", "Convolution inverse");
    invert->add_option("f", file_a)->required();

    auto* norm = app.add_subcommand("norm", "Least index with a nonzero value");
    norm->add_option("f", file_a)->required();

    auto* twist = app.add_subcommand("twist", "Pointwise totally multiplicative twist");
    twist->add_option("--char", char_file, "Character file with values at primes")->required();
    twist->add_option("f", file_a)->required();

    auto* derive = app.add_subcommand("derive", "Apply a derivation");
    derive->add_option("--kind", kind, "One of lift, p, log, holo")->required();
    derive->add_option("--p", prime, "Prime for --kind p (default 2)");
    derive->add_option("--delta", delta_file, "Additive character file for --kind lift");
    derive->add_option("f", file_a)->required();

    auto* ext_embed_cmd = app.add_subcommand("ext-embed", "Embed into the fraction-extension ring");
    ext_embed_cmd->add_option("f", file_a)->required();

    auto* ext_convolve_cmd =
        app.add_subcommand("ext-convolve", "Convolution in the fraction-extension ring");
    ext_convolve_cmd->add_option("f", file_a)->required();
    ext_convolve_cmd->add_option("g", file_b)->required();

    auto* encode = app.add_subcommand("encode", "Function to power/Laurent series");
    encode->add_option("--caps", caps_text, "Per-variable degree caps c1,c2,...")->required();
    encode->add_option("f", file_a)->required();

    auto* decode = app.add_subcommand("decode", "Power/Laurent series back to a function");
    decode->add_option("f", file_a)->required();

    auto* eval = app.add_subcommand("eval", "Evaluate the Dirichlet series at points");
    eval->add_option("--z", z_texts, "Evaluation point a+bi (repeatable)")->required();
    eval->add_flag("--check-derivative", check_derivative,
                   "Also report the finite-difference derivative discrepancy");
    eval->add_option("f", file_a)->required();

    auto* check = app.add_subcommand("check", "Per-file consistency checks");
    check->add_option("f", file_a)->required();

    auto* selftest = app.add_subcommand("selftest", "Built-in identity suite");
    selftest->add_option("--monoid", monoid_text, "Monoid spec (default nstar)");
    selftest->add_option("--ring", ring_text, "Coefficient ring (default Q)");
    selftest->add_option("--bound", bound, "Validity bound (default 1024)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (convolve->parsed()) {
        emit(format_fn(fn_convolve(load_fn(file_a), load_fn(file_b))), out_path);
    } else if (add->parsed()) {
        emit(format_fn(fn_add(load_fn(file_a), load_fn(file_b))), out_path);
    } else if (invert->parsed()) {
        emit(format_fn(fn_invert(load_fn(file_a))), out_path);
    } else if (norm->parsed()) {
        auto n = fn_norm(load_fn(file_a));
        emit(std::to_string(n ? *n : 0) + "\n", out_path);
    } else if (twist->parsed()) {
        auto L = tm_from_function(load_fn(char_file));
        emit(format_fn(fn_twist(L, load_fn(file_a))), out_path);
    } else if (derive->parsed()) {
        auto f = load_fn(file_a);
        if (kind == "lift") {
            if (delta_file.empty()) throw ParseError("--kind lift needs --delta");
            auto delta_fn = load_fn(delta_file);
            std::map<std::uint64_t, Value> pv;
            for (const auto& [n, v] : delta_fn.support()) {
                if (n == 1) continue;
                if (!is_prime(n))
                    throw ParseError(delta_file + ": character value at composite " +
                                     std::to_string(n));
                pv.emplace(n, v);
            }
            DerivationSpec d{BaseDerivation::Zero,
                             AdditiveCharacter::from_scalar(delta_fn.ring(), pv)};
            emit(format_fn(lift_derivation_scalar(d, f)), out_path);
        } else if (kind == "p") {
            emit(format_fn(p_derivation(prime, BaseDerivation::Zero, f)), out_path);
        } else if (kind == "log") {
            emit(format_fn(log_derivation(f)), out_path);
        } else if (kind == "holo") {
            emit(format_fn(holo_derivation(f)), out_path);
        } else {
            throw ParseError("unknown derivation kind '" + kind + "'");
        }
    } else if (ext_embed_cmd->parsed()) {
        emit(format_efn(ext_embed(load_fn(file_a))), out_path);
    } else if (ext_convolve_cmd->parsed()) {
        emit(format_efn(ext_convolve(load_efn(file_a), load_efn(file_b))), out_path);
    } else if (encode->parsed()) {
        std::vector<int> caps;
        for (std::size_t pos = 0; pos <= caps_text.size();) {
            std::size_t comma = caps_text.find(',', pos);
            std::string piece = caps_text.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            char* end = nullptr;
            long v = std::strtol(piece.c_str(), &end, 10);
            if (piece.empty() || end != piece.c_str() + piece.size() || v < 0)
                throw ParseError("bad caps '" + caps_text + "'");
            caps.push_back(static_cast<int>(v));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (ends_with(file_a, ".efn"))
            emit(format_laurent(laurent_encode(load_efn(file_a), caps).series), out_path);
        else
            emit(format_series(iso_encode(load_fn(file_a), caps).series), out_path);
    } else if (decode->parsed()) {
        if (ends_with(file_a, ".lser"))
            emit(format_efn(laurent_decode(load_laurent(file_a))), out_path);
        else
            emit(format_fn(iso_decode(load_series(file_a))), out_path);
    } else if (eval->parsed()) {
        auto f = load_fn(file_a);
        Ring c = Ring::complex_floats();
        std::string lines;
        for (const auto& zt : z_texts) {
            std::complex<double> z = c.parse(zt).complex_value();
            auto val = eval_F(f, z);
            lines += format_complex_number(z) + " " + format_complex_number(val.value);
            if (check_derivative) {
                auto chk = check_derivative_identity(f, z);
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.12g", chk.discrepancy);
                lines += std::string(" ") + buf;
            }
            lines += "\n";
        }
        emit(lines, out_path);
    } else if (check->parsed()) {
        return check_file(file_a);
    } else if (selftest->parsed()) {
        auto items = run_selftest(MonoidSpec::parse(monoid_text), Ring::parse_name(ring_text), bound);
        bool all = true;
        for (const auto& item : items) {
            std::cout << (item.pass ? "PASS " : "FAIL ") << item.name << "\n";
            all = all && item.pass;
        }
        return all ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dirconv::ParseError& e) {
        std::cerr << "dirconv: " << e.what() << "\n";
        return 1;
    } catch (const dirconv::Error& e) {
        std::cerr << "dirconv: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "dirconv: " << e.what() << "\n";
        return 2;
    }
}
