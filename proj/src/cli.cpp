#include "fixedspace/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "fixedspace/distributions.hpp"
#include "fixedspace/enumerate.hpp"
#include "fixedspace/reference.hpp"
#include "fixedspace/report.hpp"

namespace fixedspace {

namespace {

int default_threads() {
    if (const char* env = std::getenv("FIXEDSPACE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<int>(v);
    }
    return 1;
}

struct Options {
    bool symbolic = false;
    long ell = 0, m = 0, modulus = 0, xi = 0, q = 0;
    long l1 = 0, l2 = 0;
    int g = 0, n = 0, r = -1, s = 1;
    std::string tail_bound = "1/1000";
    std::string epsilon = "0";
    std::string format = "table";
    std::string out_path;
    bool approx = false;
    std::string group, family, against;
    bool verify = false, unitary_limit = false, bounds_check = false;
    int threads = default_threads();
    long seed = 0;  // reserved; current subcommands are exhaustive
};

class Emitter {
public:
    Emitter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
        if (!opt.out_path.empty()) {
            file_.open(opt.out_path);
            if (!file_) throw std::invalid_argument("cannot open output path: " + opt.out_path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : out_; }
    void table(const DistributionTable& t) {
        if (opt_.format == "json")
            stream() << table_json(t).dump(2) << "\n";
        else if (opt_.format == "csv")
            stream() << table_csv(t);
        else
            stream() << table_text(t);
    }
    void beta(const BetaReport& r) {
        if (opt_.format == "json")
            stream() << beta_json(r).dump(2) << "\n";
        else if (opt_.format == "csv")
            stream() << beta_csv(r);
        else
            stream() << beta_text(r);
    }
    void value(const std::string& s) { stream() << s << "\n"; }
    void rational_value(const Rat& r) {
        stream() << rat_str(r);
        if (opt_.approx) stream() << "   (~" << static_cast<double>(r) << ")";
        stream() << "\n";
    }
    void json(const Json& j) { stream() << j.dump(2) << "\n"; }

private:
    const Options& opt_;
    std::ostream& out_;
    std::ofstream file_;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

void require_odd_prime(long ell) {
    require(ell >= 3 && ell % 2 == 1 && is_prime(ell), "--ell must be an odd prime");
}

void require_prime_power(long m) {
    require(m >= 2 && factorize(m).size() == 1, "--m must be a prime power");
}

// Numeric symplectic-side commands take l (an odd prime); unitary-side
// commands take m (a prime power, the fixed-field size).
template <class Fn>
auto with_ell_mode(const Options& opt, Fn&& fn) {
    if (opt.symbolic) return fn(SymbolicMode{});
    require_odd_prime(opt.ell);
    return fn(NumericMode(opt.ell));
}

template <class Fn>
auto with_m_mode(const Options& opt, Fn&& fn) {
    if (opt.symbolic) return fn(SymbolicMode{});
    require_prime_power(opt.m);
    return fn(NumericMode(opt.m));
}

int cmd_alpha(const Options& opt, Emitter& em) {
    require(opt.g >= 1, "alpha: --g must be at least 1");
    if (opt.r >= 0) {
        require(opt.r <= 2 * opt.g, "alpha: --r must satisfy 0 <= r <= 2g");
        if (opt.symbolic) {
            em.value(alpha(SymbolicMode{}, opt.g, opt.r).str());
        } else {
            require_odd_prime(opt.ell);
            em.rational_value(alpha(NumericMode(opt.ell), opt.g, opt.r));
        }
        return 0;
    }
    GroupSpec spec{GroupSpec::Family::Symplectic, opt.g, opt.symbolic ? 0 : opt.ell, 1};
    DistributionTable t = with_ell_mode(opt, [&](auto mode) { return formula_table(mode, spec); });
    em.table(t);
    return 0;
}

int cmd_phi(const Options& opt, Emitter& em) {
    require(opt.g >= 0, "phi: --g must be nonnegative");
    auto pair = with_ell_mode(opt, [&](auto mode) {
        auto big = phi_count(mode, opt.g);
        auto ratio = big / sp_order(mode, opt.g);
        return std::make_pair(decltype(mode)::wrap(big).str(), decltype(mode)::wrap(ratio).str());
    });
    if (opt.format == "json") {
        Json j;
        j["g"] = opt.g;
        j["Phi"] = pair.first;
        j["phi"] = pair.second;
        em.json(j);
    } else {
        em.value("Phi(" + std::to_string(opt.g) + ") = " + pair.first);
        em.value("phi(" + std::to_string(opt.g) + ") = " + pair.second);
    }
    return 0;
}

int cmd_limit(const Options& opt, Emitter& em) {
    require(!opt.symbolic, "limit: the truncated limit is numeric-only");
    require(opt.r >= 0, "limit: --r is required");
    if (opt.unitary_limit)
        require_prime_power(opt.m);
    else
        require_odd_prime(opt.ell);
    Rat bound = rat_parse(opt.tail_bound);
    AlphaLimit lim = opt.unitary_limit ? unitary_alpha_limit(NumericMode(opt.m), opt.r, bound)
                                       : alpha_limit(NumericMode(opt.ell), opt.r, bound);
    if (opt.format == "json") {
        Json j;
        j["r"] = opt.r;
        j["value"] = rat_str(lim.value);
        j["tail_bound"] = rat_str(lim.tail_bound);
        j["truncation"] = lim.truncation_genus;
        em.json(j);
    } else {
        em.stream() << "value      = ";
        em.rational_value(lim.value);
        em.value("tail bound = " + rat_str(lim.tail_bound));
        em.value("truncation = " + std::to_string(lim.truncation_genus));
    }
    return 0;
}

int cmd_gsp1(const Options& opt, Emitter& em) {
    if (!opt.symbolic) {
        require_odd_prime(opt.ell);
        require(opt.xi != 0, "gsp1: --xi is required");
    }
    if (opt.r >= 0) {
        require(opt.r <= 2, "gsp1: --r must be 0, 1 or 2");
        if (opt.symbolic)
            em.value(alpha_xi_genus1(SymbolicMode{}, opt.r).str());
        else
            em.rational_value(alpha_xi_genus1(NumericMode(opt.ell), opt.xi, opt.r));
        return 0;
    }
    GroupSpec spec{GroupSpec::Family::GSpCoset, 1, opt.symbolic ? 0 : opt.ell, opt.symbolic ? 2 : opt.xi};
    if (!opt.symbolic) alpha_xi_genus1(NumericMode(opt.ell), opt.xi, 0);  // validates xi
    DistributionTable t = with_ell_mode(opt, [&](auto mode) { return formula_table(mode, spec); });
    em.table(t);
    return 0;
}

int cmd_unitary(const Options& opt, Emitter& em) {
    require(opt.n >= 1, "unitary: --n must be at least 1");
    if (opt.r >= 0) {
        require(opt.r <= opt.n, "unitary: --r must satisfy 0 <= r <= n");
        if (opt.symbolic) {
            em.value(unitary_alpha(SymbolicMode{}, opt.n, opt.r).str());
        } else {
            require_prime_power(opt.m);
            em.rational_value(unitary_alpha(NumericMode(opt.m), opt.n, opt.r));
        }
        return 0;
    }
    GroupSpec spec{GroupSpec::Family::Unitary, opt.n, opt.symbolic ? 0 : opt.m, 1};
    DistributionTable t = with_m_mode(opt, [&](auto mode) { return formula_table(mode, spec); });
    em.table(t);
    return 0;
}

int cmd_trigonal(const Options& opt, Emitter& em) {
    DistributionTable t = with_m_mode(opt, [&](auto mode) { return trigonal_table(mode); });
    em.table(t);
    return 0;
}

int cmd_bounds(const Options& opt, Emitter& em) {
    require(!opt.symbolic, "bounds: numeric mode only");
    require_odd_prime(opt.ell);
    require(opt.g >= 1, "bounds: --g must be at least 1");
    require(opt.s >= 1, "bounds: --s must be at least 1");
    require(opt.r >= 0, "bounds: --r is required");
    RankBounds b = affine_rank_bounds(NumericMode(opt.ell), opt.g, opt.s, opt.r, rat_parse(opt.epsilon));
    if (opt.format == "json") {
        Json j;
        j["g"] = opt.g;
        j["s"] = opt.s;
        j["r"] = opt.r;
        j["epsilon"] = opt.epsilon;
        j["rank_le_bound"] = rat_str(b.rank_le_bound);
        j["rank_ge_bound"] = rat_str(b.rank_ge_bound);
        em.json(j);
    } else {
        em.value("P(rank <= " + std::to_string(opt.r) + ") >= " + rat_str(b.rank_le_bound));
        em.value("P(rank >= " + std::to_string(opt.r) + ") >= " + rat_str(b.rank_ge_bound));
    }
    return 0;
}

int cmd_fw_gap(const Options& opt, Emitter& em) {
    require(opt.g >= 1, "fw-gap: --g must be at least 1");
    if (!opt.symbolic) require_odd_prime(opt.ell);
    if (opt.symbolic) {
        RatFun gap = fw_gap(SymbolicMode{}, opt.g);
        if (opt.format == "json") {
            Json j;
            j["g"] = opt.g;
            j["gap"] = gap.str();
            j["order_at_infinity"] = gap.is_zero() ? 0 : gap.degree_diff();
            em.json(j);
        } else {
            em.value(gap.str());
        }
        return 0;
    }
    em.rational_value(fw_gap(NumericMode(opt.ell), opt.g));
    return 0;
}

GroupSpec oracle_spec(const Options& opt) {
    if (opt.group == "sp") {
        long modulus = opt.modulus > 0 ? opt.modulus : opt.ell;
        require(modulus >= 2, "oracle: --ell or --modulus required for sp");
        require(opt.g >= 1, "oracle: --g required for sp");
        return GroupSpec{GroupSpec::Family::Symplectic, opt.g, modulus, 1};
    }
    if (opt.group == "gsp") {
        require(opt.ell >= 2, "oracle: --ell required for gsp");
        require(opt.g >= 1 && opt.xi != 0, "oracle: --g and --xi required for gsp");
        return GroupSpec{GroupSpec::Family::GSpCoset, opt.g, opt.ell, opt.xi};
    }
    if (opt.group == "gu") {
        require(opt.m >= 2, "oracle: --m required for gu");
        require(opt.n >= 1, "oracle: --n required for gu");
        return GroupSpec{GroupSpec::Family::Unitary, opt.n, opt.m, 1};
    }
    if (opt.group == "gl") {
        require(opt.ell >= 2, "oracle: --ell required for gl");
        require(opt.n >= 1, "oracle: --n required for gl");
        return GroupSpec{GroupSpec::Family::GeneralLinear, opt.n, opt.ell, 1};
    }
    throw std::invalid_argument("oracle: --group must be one of sp, gsp, gu, gl");
}

int cmd_oracle(const Options& opt, Emitter& em, std::ostream& err) {
    GroupSpec spec = oracle_spec(opt);
    DistributionTable t = empirical_group_distribution(spec, opt.threads);
    em.table(t);
    if (opt.against.empty()) return 0;
    require(opt.against == "formula", "oracle: --against only supports 'formula'");
    DistributionTable f = formula_table(NumericMode(spec.modulus), spec);
    bool match = t.entries.size() == f.entries.size();
    for (size_t i = 0; match && i < t.entries.size(); ++i)
        match = t.entries[i].first == f.entries[i].first &&
                t.entries[i].second.rational() == f.entries[i].second.rational();
    if (!match) {
        err << "oracle: brute-force distribution disagrees with the formula table\n";
        return 2;
    }
    em.value("oracle matches formula");
    return 0;
}

int cmd_crt_check(const Options& opt, Emitter& em, std::ostream& err) {
    require(opt.l1 >= 3 && opt.l2 >= 3, "crt-check: --l1 and --l2 are required odd primes");
    CrtReport rep = crt_product_check(opt.l1, opt.l2, opt.threads);
    if (opt.format == "json") {
        Json j;
        j["l1"] = rep.l1;
        j["l2"] = rep.l2;
        j["order"] = rep.order;
        j["factors_exactly"] = rep.factors_exactly;
        Json joint = Json::array();
        for (const auto& [key, c] : rep.joint)
            joint.push_back({{"r1", key.first}, {"r2", key.second}, {"count", c}});
        j["joint"] = joint;
        em.json(j);
    } else {
        em.value("Sp_2(Z/" + std::to_string(rep.l1 * rep.l2) + "): " + std::to_string(rep.order) + " elements");
        for (const auto& [key, c] : rep.joint)
            em.value("  (r1=" + std::to_string(key.first) + ", r2=" + std::to_string(key.second) + ")  " +
                     std::to_string(c));
        em.value(std::string("joint distribution factors exactly: ") + (rep.factors_exactly ? "yes" : "no"));
    }
    if (!rep.factors_exactly) {
        err << "crt-check: joint distribution does not factor\n";
        return 2;
    }
    return 0;
}

int cmd_curves(const Options& opt, Emitter& em) {
    require(opt.q >= 5, "curves: --q is required (odd prime)");
    require(opt.ell >= 3, "curves: --ell is required (odd prime)");
    if (opt.bounds_check) {
        AffineBoundsReport rep = affine_bounds_check(opt.q, opt.ell, opt.s);
        if (opt.format == "json") {
            Json j;
            j["q"] = rep.q;
            j["ell"] = rep.ell;
            j["s"] = rep.s;
            j["family_size"] = rep.family_size;
            Json jac = Json::array(), cls = Json::array();
            for (const auto& f : rep.jac_rank_freq) jac.push_back(rat_str(f));
            for (const auto& f : rep.class_rank_freq) cls.push_back(rat_str(f));
            j["jac_rank_freq"] = jac;
            j["class_rank_freq"] = cls;
            j["epsilon"] = rat_str(rep.epsilon);
            j["max_rank_drop"] = rep.max_rank_drop;
            j["class_rank_equals_jac_rank"] = rep.class_rank_equals_jac_rank;
            j["le_bounds_hold"] = rep.le_bounds_hold;
            j["ge_bounds_hold"] = rep.ge_bounds_hold;
            em.json(j);
        } else {
            em.value("affine bounds check over F_" + std::to_string(rep.q) + ", ell = " +
                     std::to_string(rep.ell) + ", |S| = " + std::to_string(rep.s));
            em.value("  curves: " + std::to_string(rep.family_size));
            em.value("  epsilon (observed): " + rat_str(rep.epsilon));
            em.value("  max rank drop: " + std::to_string(rep.max_rank_drop));
            em.value(std::string("  rank <= r bounds hold: ") + (rep.le_bounds_hold ? "yes" : "no"));
            em.value(std::string("  rank >= r bounds hold: ") + (rep.ge_bounds_hold ? "yes" : "no"));
        }
        return 0;
    }
    BetaReport rep;
    if (opt.family == "weierstrass")
        rep = beta_elliptic(opt.q, opt.ell, EllipticFamily::ShortWeierstrass, opt.threads);
    else if (opt.family == "legendre")
        rep = beta_elliptic(opt.q, opt.ell, EllipticFamily::Legendre, opt.threads);
    else if (opt.family == "quintic")
        rep = beta_genus2_divisibility(opt.q, opt.ell, opt.threads);
    else
        throw std::invalid_argument("curves: --family must be weierstrass, legendre or quintic");
    em.beta(rep);
    return 0;
}

int cmd_table1(const Options& opt, Emitter& em, std::ostream& err) {
    const auto& ref = table1_reference();
    bool all_match = true;
    SymbolicMode mode;
    std::vector<std::pair<const Table1Entry*, RatFun>> rows;
    for (const auto& entry : ref) rows.emplace_back(&entry, alpha(mode, entry.g, entry.r));
    if (opt.format == "json") {
        Json j = Json::array();
        for (const auto& [entry, computed] : rows) {
            bool ok = computed == entry->value;
            all_match = all_match && ok;
            Json row;
            row["g"] = entry->g;
            row["r"] = entry->r;
            row["value"] = computed.str();
            if (opt.verify) row["matches_reference"] = ok;
            j.push_back(row);
        }
        em.json(j);
    } else {
        for (const auto& [entry, computed] : rows) {
            bool ok = computed == entry->value;
            all_match = all_match && ok;
            std::string line = "alpha(" + std::to_string(entry->g) + "," + std::to_string(entry->r) +
                               ") = " + computed.str();
            if (opt.verify) line += ok ? "   [ok]" : "   [MISMATCH, expected " + entry->value.str() + "]";
            em.value(line);
        }
    }
    if (opt.verify && !all_match) {
        err << "table1: computed values disagree with the reference table\n";
        return 2;
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact fixed-space distributions of finite classical groups, "
                 "with brute-force and curve-counting verification"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_mode_flags) {
        cmd->add_option("--format", opt.format, "output format: table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
        cmd->add_flag("--approx", opt.approx, "append a marked decimal rendering to exact values");
        cmd->add_option("--threads", opt.threads, "parallelism degree (default FIXEDSPACE_THREADS or 1)");
        cmd->add_option("--seed", opt.seed, "sampling seed (reserved; current subcommands are exhaustive)");
        if (with_mode_flags) {
            auto* sym = cmd->add_flag("--symbolic", opt.symbolic, "compute in the indeterminate l");
            auto* ell = cmd->add_option("--ell", opt.ell, "concrete odd prime l");
            auto* m = cmd->add_option("--m", opt.m, "fixed-field size m (unitary family)");
            sym->excludes(ell);
            sym->excludes(m);
        }
    };

    auto* alpha_cmd = app.add_subcommand("alpha", "alpha(g, r), or the full genus-g table");
    alpha_cmd->add_option("--g", opt.g, "genus")->required();
    alpha_cmd->add_option("--r", opt.r, "fixed-space dimension (omit for the full table)");
    add_common(alpha_cmd, true);

    auto* phi_cmd = app.add_subcommand("phi", "Phi(g) and phi(g) = Phi(g)/nu(g)");
    phi_cmd->add_option("--g", opt.g, "genus")->required();
    add_common(phi_cmd, true);

    auto* limit_cmd = app.add_subcommand("limit", "certified truncation of alpha(inf, r)");
    limit_cmd->add_option("--r", opt.r, "fixed-space dimension")->required();
    limit_cmd->add_option("--tail-bound", opt.tail_bound, "requested tail bound (rational)")
        ->capture_default_str();
    limit_cmd->add_flag("--unitary", opt.unitary_limit, "unitary family limit (uses --m)");
    add_common(limit_cmd, true);

    auto* gsp1_cmd = app.add_subcommand("gsp1", "alpha^xi(1, r) for xi not 1 mod l");
    gsp1_cmd->add_option("--xi", opt.xi, "similitude multiplier");
    gsp1_cmd->add_option("--r", opt.r, "fixed-space dimension (omit for the full table)");
    add_common(gsp1_cmd, true);

    auto* uni_cmd = app.add_subcommand("unitary", "unitary alpha_U(n, r) table");
    uni_cmd->add_option("--n", opt.n, "number of variables")->required();
    uni_cmd->add_option("--r", opt.r, "fixed-space dimension (omit for the full table)");
    add_common(uni_cmd, true);

    auto* tri_cmd = app.add_subcommand("trigonal", "torsion table of the trigonal genus-3 family");
    add_common(tri_cmd, true);

    auto* bounds_cmd = app.add_subcommand("bounds", "affine ideal-class rank bound pair");
    bounds_cmd->add_option("--g", opt.g, "genus")->required();
    bounds_cmd->add_option("--s", opt.s, "number of points in S")->required();
    bounds_cmd->add_option("--r", opt.r, "rank threshold")->required();
    bounds_cmd->add_option("--epsilon", opt.epsilon, "equidistribution tolerance (rational)")
        ->capture_default_str();
    add_common(bounds_cmd, true);

    auto* fw_cmd = app.add_subcommand("fw-gap", "gap between the general-linear product and alpha(g, 0)");
    fw_cmd->add_option("--g", opt.g, "genus")->required();
    add_common(fw_cmd, true);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force fixed-space distribution");
    oracle_cmd->add_option("--group", opt.group, "sp, gsp, gu or gl")->required();
    oracle_cmd->add_option("--g", opt.g, "genus (sp, gsp)");
    oracle_cmd->add_option("--n", opt.n, "variables (gu, gl)");
    oracle_cmd->add_option("--modulus", opt.modulus, "ring modulus l^e or squarefree composite (sp)");
    oracle_cmd->add_option("--xi", opt.xi, "similitude multiplier (gsp)");
    oracle_cmd->add_option("--against", opt.against, "compare against 'formula'; exit 2 on mismatch");
    add_common(oracle_cmd, true);

    auto* crt_cmd = app.add_subcommand("crt-check", "joint mod-l1/mod-l2 independence over Sp_2(Z/l1*l2)");
    crt_cmd->add_option("--l1", opt.l1, "first odd prime")->required();
    crt_cmd->add_option("--l2", opt.l2, "second odd prime")->required();
    add_common(crt_cmd, false);

    auto* curves_cmd = app.add_subcommand("curves", "exhaustive curve-family statistics vs the formulas");
    curves_cmd->add_option("--family", opt.family, "weierstrass, legendre or quintic");
    curves_cmd->add_option("--q", opt.q, "field size (odd prime)")->required();
    curves_cmd->add_flag("--bounds-check", opt.bounds_check, "run the affine rank-bound check instead");
    curves_cmd->add_option("--s", opt.s, "number of points in S for --bounds-check");
    add_common(curves_cmd, true);

    auto* t1_cmd = app.add_subcommand("table1", "the thirteen closed-form alpha(g, r) values, g <= 3");
    t1_cmd->add_flag("--verify", opt.verify, "check against the embedded reference; exit 2 on mismatch");
    add_common(t1_cmd, false);

    std::vector<const char*> argv;
    argv.push_back("fixedspace");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        Emitter em(opt, out);
        if (alpha_cmd->parsed()) return cmd_alpha(opt, em);
        if (phi_cmd->parsed()) return cmd_phi(opt, em);
        if (limit_cmd->parsed()) return cmd_limit(opt, em);
        if (gsp1_cmd->parsed()) return cmd_gsp1(opt, em);
        if (uni_cmd->parsed()) return cmd_unitary(opt, em);
        if (tri_cmd->parsed()) return cmd_trigonal(opt, em);
        if (bounds_cmd->parsed()) return cmd_bounds(opt, em);
        if (fw_cmd->parsed()) return cmd_fw_gap(opt, em);
        if (oracle_cmd->parsed()) return cmd_oracle(opt, em, err);
        if (crt_cmd->parsed()) return cmd_crt_check(opt, em, err);
        if (curves_cmd->parsed()) return cmd_curves(opt, em);
        if (t1_cmd->parsed()) return cmd_table1(opt, em, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 1;
}

}  // namespace fixedspace
