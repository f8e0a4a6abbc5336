#include "higgs/cli.hpp"

#include "higgs/gauge.hpp"
#include "higgs/io.hpp"
#include "higgs/oracles.hpp"
#include "higgs/refine.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>

namespace higgs::cli {

namespace {

using asymptotic::Curve;
using asymptotic::Mode;
using nlohmann::json;
using wallcross::Engine;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSuiteFailed = 1;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

// ---------------------------------------------------------------------------
// invariant cache

struct Cache {
    std::filesystem::path file;
    io::CacheEntries entries;
    bool enabled = false;
    bool dirty = false;

    static Cache open(const std::string& dir) {
        Cache c;
        if (dir.empty()) return c;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        c.file = std::filesystem::path(dir) / "invariants.json";
        auto loaded = io::load_invariants(c.file);
        if (!loaded) {
            std::cerr << "warning: cache file " << c.file.string()
                      << " has an unrecognized version or is unreadable; running uncached\n";
            return c;
        }
        c.entries = std::move(*loaded);
        c.enabled = true;
        return c;
    }

    const RationalFn* find(const io::InvariantKey& k) const {
        auto it = entries.find(k);
        return it == entries.end() ? nullptr : &it->second;
    }

    void seed_engine(Engine& eng, int g, int p, Mode m) const {
        for (const auto& [k, v] : entries)
            if (k.g == g && k.p == p && k.mode == m) eng.seed(k.r, k.e, v);
    }

    void absorb(const Engine& eng, int g, int p, Mode m) {
        if (!enabled) return;
        for (const auto& [k, v] : eng.table())
            dirty |= entries.emplace(io::InvariantKey{g, p, k.first, k.second, m}, v).second;
    }

    void flush() {
        if (enabled && dirty) io::save_invariants(file, entries);
    }
};

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
    int g = 2;
    int p = 0;
    int r = 1;
    long e = 0;
    std::string mode = "y";
    std::string what = "higgs";
    std::string format = "text";
    std::string cache_dir;
};

int cmd_compute(const ComputeArgs& a) {
    Curve c{a.g, a.p};
    Mode mode = *io::mode_from_name(a.mode);
    if ((a.what == "poincare" || a.what == "hodge") &&
        std::gcd(static_cast<long>(a.r), a.e) != 1)
        throw refine::ValidationFailed("coprimality required: gcd(r, e) = 1 for --what " + a.what);

    Cache cache = Cache::open(a.cache_dir);
    Engine eng(c, mode);
    io::InvariantKey key{a.g, a.p, a.r, eng.normalize_degree(a.r, a.e), mode};

    const RationalFn* hit = cache.find(key);
    if (a.what == "hbar" || !hit) cache.seed_engine(eng, a.g, a.p, mode);
    RationalFn h = hit ? *hit : eng.higgs_tilde(a.r, a.e);
    RationalFn value = a.what == "hbar" ? refine::multicover_invert(eng, a.r, a.e) : h;
    cache.absorb(eng, a.g, a.p, mode);
    cache.flush();

    json doc{{"g", a.g}, {"p", a.p}, {"r", a.r}, {"e", a.e}, {"mode", a.mode}, {"what", a.what}};
    std::string text;
    if (a.what == "poincare") {
        auto [P, n] = refine::poincare_from_higgs(c, a.r, a.e, value);
        json betti = json::array();
        for (const auto& b : P.betti) {
            if (!text.empty()) text += " ";
            text += int_str(b);
            betti.push_back(int_str(b));
        }
        doc["value"] = {{"betti", std::move(betti)}, {"n", n}};
    } else if (a.what == "hodge") {
        auto [H, n] = refine::hodge_from_higgs(c, a.r, a.e, value);
        text = io::poly_text(oracles::hodge_poly(H));
        json hs = json::array();
        for (const auto& [ij, hv] : H.h)
            hs.push_back({{"i", ij.first}, {"j", ij.second}, {"h", int_str(hv)}});
        doc["value"] = {{"h", std::move(hs)}, {"n", n}};
    } else {
        text = io::ratfn_text(value);
        doc["value"] = io::ratfn_to_json(value);
    }
    if (a.format == "json")
        std::cout << doc.dump() << "\n";
    else
        std::cout << text << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// dump-asymptotic

struct DumpArgs {
    int g = 2;
    int p = 0;
    int r = 1;
    int emax = 0;
    std::string mode = "y";
    std::string format = "text";
};

// project the lambda coefficient onto the refinement variables
LaurentPoly drop_lambda(const LaurentPoly& p) {
    VarSet target;
    const VarSet& src = p.vars();
    for (size_t i = 0; i < src.size(); ++i)
        if (src[i] != Var::lambda) target.vs[target.n++] = src[i];
    return p.substitute(target, [&](Var v) -> std::optional<std::pair<int, Exp>> {
        int idx = target.index_of(v);
        if (idx < 0) return std::nullopt;
        Exp e = exp_zero();
        e[idx] = 1;
        return std::pair<int, Exp>{1, e};
    });
}

int cmd_dump(const DumpArgs& a) {
    Curve c{a.g, a.p};
    Mode mode = *io::mode_from_name(a.mode);
    int lo = asymptotic::lower_degree_bound(c, a.r);
    json rows = json::array();
    std::string text;
    if (a.emax >= lo) {
        PolySeries s = asymptotic::rank_series(c, a.r, a.emax, mode);
        for (int e = lo; e <= a.emax; ++e) {
            LaurentPoly v = drop_lambda(s.at(e));
            if (a.format == "json")
                rows.push_back({{"e", e}, {"value", io::poly_to_json(v)}});
            else
                text += "e=" + std::to_string(e) + ": " + io::poly_text(v) + "\n";
        }
    }
    if (a.format == "json") {
        json doc{{"g", a.g}, {"p", a.p}, {"r", a.r}, {"mode", a.mode}, {"rows", std::move(rows)}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << text;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string suite;
    int gmax = 3;
    double timeout = 0;
    std::string fixtures = "tests/fixtures";
};

class Reporter {
public:
    Reporter(std::string suite, double timeout)
        : suite_(std::move(suite)),
          timeout_(timeout),
          start_(std::chrono::steady_clock::now()) {}

    void run(const std::string& id, bool blocking, const std::function<bool(std::string&)>& body) {
        json line{{"suite", suite_}, {"case", id}};
        if (skipping_) {
            line["status"] = "skip";
            std::cout << line.dump() << "\n";
            return;
        }
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& ex) {
            detail = ex.what();
        }
        auto now = std::chrono::steady_clock::now();
        line["status"] = ok ? "pass" : "fail";
        line["elapsed"] =
            std::round(std::chrono::duration<double>(now - t0).count() * 1000.0) / 1000.0;
        if (!ok && !detail.empty()) line["detail"] = detail;
        std::cout << line.dump() << "\n" << std::flush;
        if (!ok && blocking) failed_ = true;
        if (timeout_ > 0 &&
            std::chrono::duration<double>(now - start_).count() > timeout_)
            skipping_ = true;
    }

    bool failed() const { return failed_; }

private:
    std::string suite_;
    double timeout_;
    std::chrono::steady_clock::time_point start_;
    bool skipping_ = false;
    bool failed_ = false;
};

std::string case_id(const char* stem, int g, int p) {
    return std::string(stem) + "_g" + std::to_string(g) + "_p" + std::to_string(p);
}

// Hodge polynomial of the moduli space at charge (r, e), via the recursion.
RationalFn hodge_value(Curve c, int r, long e) {
    Engine eng(c, Mode::uv);
    auto [H, n] = refine::hodge_from_higgs(c, r, e, eng.higgs_tilde(r, e));
    (void)n;
    return RationalFn(oracles::hodge_poly(H));
}

// t -> t^k on every refinement variable
RationalFn rescale_vars(const RationalFn& f, int k) {
    const VarSet& vs = f.vars();
    return f.substitute(vs, [&](Var v) -> std::optional<std::pair<int, Exp>> {
        int idx = vs.index_of(v);
        if (idx < 0) return std::nullopt;
        Exp e = exp_zero();
        e[idx] = k;
        return std::pair<int, Exp>{1, e};
    });
}

// Rebuilds H~(r, e) from the integral invariants by the multicover sum; the
// exact inverse of the peeling, used as a round-trip check.
RationalFn multicover_reconstruct(Engine& eng, int r, long e) {
    RationalFn total = refine::multicover_invert(eng, r, e);
    long gc = std::gcd(static_cast<long>(r), e);
    for (long k = 2; k <= gc; ++k) {
        if (gc % k) continue;
        RationalFn sub = rescale_vars(refine::multicover_invert(eng, r / k, e / k), k);
        int sgn = ((r - r / k) * eng.curve().p) % 2 ? -1 : 1;
        total = total + (sub / RationalFn(eng.bracket(k))).scaled(Rat(sgn, k));
    }
    return total;
}

void suite_paper_tables(Reporter& rep, const VerifyArgs& a) {
    auto cases = io::read_fixture_dir(a.fixtures);
    std::map<std::tuple<int, int, Mode>, Engine> engines;
    for (const auto& fc : cases) {
        if (fc.g > a.gmax) continue;
        auto [it, fresh] =
            engines.try_emplace({fc.g, fc.p, fc.mode}, Curve{fc.g, fc.p}, fc.mode);
        (void)fresh;
        Engine& eng = it->second;
        rep.run(fc.id, true, [&](std::string& detail) {
            RationalFn expect = io::parse_expression(fc.expr, eng.vars());
            if (eng.higgs_tilde(fc.r, fc.e) == expect) return true;
            detail = "computed invariant differs from the printed table";
            return false;
        });
    }
}

void suite_oracles(Reporter& rep, const VerifyArgs& a) {
    int gtop = std::min(a.gmax, 3);
    for (int g = 2; g <= gtop; ++g)
        for (int p = 0; p <= 2; ++p)
            rep.run(case_id("loc_rank2", g, p), true, [&](std::string&) {
                return oracles::loc_rank2_hodge(g, p) == hodge_value({g, p}, 2, 1);
            });
    for (int p = 0; p <= 2; ++p)
        rep.run(case_id("loc_rank3", 2, p), true, [&](std::string&) {
            return oracles::loc_rank3_hodge(2, p) == hodge_value({2, p}, 3, 1);
        });
    for (int g = 2; g <= gtop; ++g) {
        rep.run("hrv_r1_g" + std::to_string(g), true, [&](std::string&) {
            return oracles::hrv_E(g, 1) == hodge_value({g, 0}, 1, 0);
        });
        rep.run("hrv_r2_g" + std::to_string(g), true, [&](std::string&) {
            return oracles::hrv_E(g, 2) == oracles::loc_rank2_hodge(g, 0);
        });
    }
    rep.run("hrv_r3_g2", true, [&](std::string&) {
        return oracles::hrv_E(2, 3) == oracles::loc_rank3_hodge(2, 0);
    });
}

void suite_properties(Reporter& rep, const VerifyArgs& a) {
    // rank-one closed form
    for (int g = 2; g <= std::min(a.gmax, 5); ++g)
        for (int p = 0; p <= 2; ++p)
            rep.run(case_id("rank1", g, p), true, [&](std::string& detail) {
                Engine eng({g, p}, Mode::y);
                LaurentPoly om = lp_one(eng.vars()) - LaurentPoly::variable(eng.vars(), Var::y);
                Exp shift = exp_zero();
                shift[eng.vars().index_of(Var::y)] = 2 * g - 1;
                RationalFn expect = RationalFn::reduced(
                    om.pow(2 * g), LaurentPoly::monomial(eng.vars(), shift, Rat(1)));
                for (long e = -3; e <= 3; ++e)
                    if (!(eng.higgs_tilde(1, e) == expect)) {
                        detail = "rank-one invariant differs at e=" + std::to_string(e);
                        return false;
                    }
                return true;
            });

    const std::pair<int, long> keys[] = {{2, 1}, {3, 1}, {3, 2}};
    for (int g = 2; g <= std::min(a.gmax, 3); ++g)
        for (int p = 0; p <= 2; ++p) {
            Curve c{g, p};
            // moduli-space extraction validates positivity, normalization,
            // symmetry, and the dimension identity internally
            rep.run(case_id("structure_poincare", g, p), true, [&](std::string&) {
                Engine eng(c, Mode::y);
                for (auto [r, e] : keys)
                    (void)refine::poincare_from_higgs(c, r, e, eng.higgs_tilde(r, e));
                return true;
            });
            rep.run(case_id("structure_hodge_rank2", g, p), true, [&](std::string& detail) {
                Engine ey(c, Mode::y);
                Engine euv(c, Mode::uv);
                auto [P, np] = refine::poincare_from_higgs(c, 2, 1, ey.higgs_tilde(2, 1));
                auto [H, nh] = refine::hodge_from_higgs(c, 2, 1, euv.higgs_tilde(2, 1));
                if (np != nh || !(H.collapse() == P)) {
                    detail = "Hodge numbers do not collapse to the Betti numbers";
                    return false;
                }
                return true;
            });
            rep.run(case_id("parity_rank2", g, p), true, [&](std::string& detail) {
                Engine eng(c, Mode::y);
                // the raw recursion divides by [e - r(g-1)], so skip the one
                // degenerate even degree e = 2(g-1)
                bool even = true;
                for (long e : {2, 4, 6})
                    if (e != 2L * (g - 1))
                        even = even && same(eng.compute_raw(2, 0), eng.compute_raw(2, e));
                bool odd = same(eng.compute_raw(2, 1), eng.compute_raw(2, 3)) &&
                           same(eng.compute_raw(2, 1), eng.compute_raw(2, 5));
                if (!even || !odd) {
                    detail = "rank-two invariant is not a function of the degree parity";
                    return false;
                }
                return true;
            });
            rep.run(case_id("equal_rank3", g, p), true, [&](std::string&) {
                Engine eng(c, Mode::y);
                return eng.higgs_tilde(3, 2) == eng.higgs_tilde(3, 1);
            });
            rep.run(case_id("multicover_roundtrip", g, p), true, [&](std::string& detail) {
                Engine eng(c, Mode::y);
                for (int r = 2; r <= 3; ++r)
                    for (long e = 0; e < r; ++e)
                        if (!(multicover_reconstruct(eng, r, e) == eng.higgs_tilde(r, e))) {
                            detail = "multicover sum does not rebuild H~(" +
                                     std::to_string(r) + "," + std::to_string(e) + ")";
                            return false;
                        }
                return true;
            });
        }
    // the rank-3 doubly refined collapse is the expensive case; genus 2 only
    rep.run("structure_hodge_rank3_g2_p0", true, [&](std::string& detail) {
        Curve c{2, 0};
        Engine ey(c, Mode::y);
        Engine euv(c, Mode::uv);
        auto [P, np] = refine::poincare_from_higgs(c, 3, 1, ey.higgs_tilde(3, 1));
        auto [H, nh] = refine::hodge_from_higgs(c, 3, 1, euv.higgs_tilde(3, 1));
        if (np != nh || !(H.collapse() == P)) {
            detail = "Hodge numbers do not collapse to the Betti numbers";
            return false;
        }
        return true;
    });
}

void suite_gauge(Reporter& rep, const VerifyArgs& a) {
    for (int g = 2; g <= std::min(a.gmax, 3); ++g)
        for (int p = 0; p <= 2; ++p) {
            Curve c{g, p};
            for (int n = 1; n <= 3; ++n)
                for (const partitions::Partition& Y : partitions::partitions_of(n)) {
                    std::string tag;
                    for (int part : Y) tag += std::to_string(part);
                    rep.run(case_id("gauge", g, p) + "_Y" + tag, true, [&](std::string& detail) {
                        if (!(gauge::spec_refined(c, Y).normalized() ==
                              asymptotic::omega_y(c, Y).normalized())) {
                            detail = "singly refined specialization mismatch";
                            return false;
                        }
                        if (!(gauge::spec_doubly(c, Y).normalized() ==
                              asymptotic::omega_uv(c, Y).normalized())) {
                            detail = "doubly refined specialization mismatch";
                            return false;
                        }
                        return true;
                    });
                }
        }
}

void suite_conjectures(Reporter& rep, const VerifyArgs& a) {
    for (int g = 2; g <= std::min(a.gmax, 3); ++g)
        for (int p = 0; p <= 2; ++p) {
            Engine eng({g, p}, Mode::y);
            for (int r = 2; r <= 3; ++r) {
                for (long e = 0; e < r; ++e)
                    rep.run(case_id("hbar_integral", g, p) + "_r" + std::to_string(r) + "_e" +
                                std::to_string(e),
                            false, [&](std::string&) {
                                (void)refine::require_integral(
                                    refine::multicover_invert(eng, r, e));
                                return true;
                            });
                rep.run(case_id("hbar_degree_independent", g, p) + "_r" + std::to_string(r),
                        false, [&](std::string&) {
                            return refine::multicover_invert(eng, r, 0) == eng.higgs_tilde(r, 1);
                        });
            }
        }
}

int cmd_verify(const VerifyArgs& a) {
    Reporter rep(a.suite, a.timeout);
    if (a.suite == "paper-tables")
        suite_paper_tables(rep, a);
    else if (a.suite == "oracles")
        suite_oracles(rep, a);
    else if (a.suite == "properties")
        suite_properties(rep, a);
    else if (a.suite == "gauge")
        suite_gauge(rep, a);
    else
        suite_conjectures(rep, a);
    return rep.failed() ? kExitSuiteFailed : kExitOk;
}

// ---------------------------------------------------------------------------

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const refine::NonIntegral& ex) {
        std::cerr << "validation failure: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const refine::ValidationFailed& ex) {
        std::cerr << "validation failure: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const io::ParseError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kExitInternal;
    }
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"exact refined invariants of twisted Higgs bundles on curves"};
    app.require_subcommand(1);

    ComputeArgs ca;
    if (const char* env = std::getenv("HIGGS_CACHE_DIR")) ca.cache_dir = env;
    auto* comp = app.add_subcommand("compute", "compute one invariant or moduli-space polynomial");
    comp->add_option("--g", ca.g, "genus of the curve (>= 2)")->capture_default_str();
    comp->add_option("--p", ca.p, "degree of the first twisting bundle (>= 0)")
        ->capture_default_str();
    comp->add_option("--r", ca.r, "rank (>= 1)")->capture_default_str();
    comp->add_option("--e", ca.e, "degree; the invariant depends on it through e mod r")
        ->capture_default_str();
    comp->add_option("--mode", ca.mode, "refinement variables: y or uv")
        ->check(CLI::IsMember({"y", "uv"}))
        ->capture_default_str();
    comp->add_option("--what", ca.what,
                     "higgs (normalized invariant), hbar (integral invariant), "
                     "poincare or hodge (moduli-space polynomial)")
        ->check(CLI::IsMember({"higgs", "hbar", "poincare", "hodge"}))
        ->capture_default_str();
    comp->add_option("--format", ca.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    comp->add_option("--cache-dir", ca.cache_dir,
                     "invariant cache directory (default: $HIGGS_CACHE_DIR)");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "run a verification suite (one JSON line per case)");
    ver->add_option("--suite", va.suite, "paper-tables, oracles, properties, gauge, conjectures")
        ->required()
        ->check(CLI::IsMember({"paper-tables", "oracles", "properties", "gauge", "conjectures"}));
    ver->add_option("--g-max", va.gmax, "largest genus to verify")->capture_default_str();
    ver->add_option("--timeout", va.timeout,
                    "soft wall-clock budget in seconds; remaining cases are skipped");
    ver->add_option("--fixtures", va.fixtures, "printed-table fixture directory")
        ->capture_default_str();

    DumpArgs da;
    auto* dmp = app.add_subcommand("dump-asymptotic",
                                   "tabulate asymptotic invariants A(r, e) of the large-"
                                   "stability chamber");
    dmp->add_option("--g", da.g, "genus of the curve (>= 2)")->capture_default_str();
    dmp->add_option("--p", da.p, "degree of the first twisting bundle (>= 0)")
        ->capture_default_str();
    dmp->add_option("--r", da.r, "rank (>= 1)")->capture_default_str();
    dmp->add_option("--emax", da.emax, "largest degree to tabulate")->capture_default_str();
    dmp->add_option("--mode", da.mode, "refinement variables: y or uv")
        ->check(CLI::IsMember({"y", "uv"}))
        ->capture_default_str();
    dmp->add_option("--format", da.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    return guarded([&]() -> int {
        if (*comp) {
            if (ca.g < 2 || ca.p < 0 || ca.r < 1) {
                std::cerr << "usage error: require g >= 2, p >= 0, r >= 1\n";
                return kExitUsage;
            }
            if (ca.what == "hodge") {
                if (comp->count("--mode") == 0)
                    ca.mode = "uv";
                else if (ca.mode != "uv") {
                    std::cerr << "usage error: --what hodge requires --mode uv\n";
                    return kExitUsage;
                }
            }
            if (ca.what == "poincare" && ca.mode != "y") {
                std::cerr << "usage error: --what poincare requires --mode y\n";
                return kExitUsage;
            }
            return cmd_compute(ca);
        }
        if (*ver) return cmd_verify(va);
        if (da.g < 2 || da.p < 0 || da.r < 1) {
            std::cerr << "usage error: require g >= 2, p >= 0, r >= 1\n";
            return kExitUsage;
        }
        return cmd_dump(da);
    });
}

} // namespace higgs::cli
