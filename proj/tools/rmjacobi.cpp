// Command-line surface for the rmj library: code construction, Jacobi
// polynomials, harmonic weight enumerators, design tests and the end-to-end
// verification suite. Exit codes: 0 success, 1 verification failure,
// 2 usage/input error, 3 capacity.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "rmj/design.hpp"
#include "rmj/harmonic.hpp"
#include "rmj/jacobi.hpp"
#include "rmj/kernels.hpp"
#include "rmj/verify.hpp"

using namespace rmj;
using json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool slow = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One of --rm1 M / --ehamming M / --file PATH selects the code.
struct CodeSource {
    int rm1 = -1;
    int ehamming = -1;
    std::string file;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--rm1", rm1, "first-order Reed-Muller code RM(1,m)");
        cmd->add_option("--ehamming", ehamming, "extended Hamming code H_{2^m} (dual of RM(1,m))");
        cmd->add_option("--file", file, "generator matrix file ('n k' header, then 0/1 rows)");
    }

    BinaryCode resolve() const {
        const int picked = (rm1 >= 0) + (ehamming >= 0) + !file.empty();
        if (picked != 1) throw input_error("select exactly one of --rm1, --ehamming, --file");
        if (rm1 >= 0) return reed_muller_1(rm1);
        if (ehamming >= 0) return extended_hamming(ehamming);
        return generator_matrix_from_text(read_file(file));
    }

    std::string label() const {
        if (rm1 >= 0) return "RM(1," + std::to_string(rm1) + ")";
        if (ehamming >= 0) return "H_" + std::to_string(1u << ehamming);
        return file;
    }
};

std::vector<std::uint32_t> parse_indices(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return out;
}

json code_to_json(const BinaryCode& c) {
    json j;
    j["n"] = c.length();
    j["k"] = c.dimension();
    j["rows"] = json::array();
    for (const auto& g : c.generators()) j["rows"].push_back(g.to_string());
    return j;
}

void print_poly(const Poly4& p, const GlobalOpts& g) {
    std::cout << (g.format == "json" ? p.to_json() : p.str()) << "\n";
}

void print_code(const BinaryCode& c, const GlobalOpts& g) {
    if (g.format == "json")
        std::cout << code_to_json(c).dump() << "\n";
    else
        std::cout << generator_matrix_to_text(c);
}

void print_blocks(const BlockSet& b, const GlobalOpts& g) {
    if (g.format == "json") {
        json j;
        j["n"] = b.n;
        j["blocks"] = b.blocks;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << blockset_to_text(b);
    }
}

std::pair<int, int> parse_m_range(const std::string& spec) {
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
        const int m = std::stoi(spec);
        return {m, m};
    }
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
}

int run_checks(const std::vector<CheckResult>& results, const GlobalOpts& g) {
    int fails = 0;
    for (const auto& r : results) {
        if (g.format == "json") {
            json j{{"check", r.name}, {"pass", r.pass}};
            if (!r.detail.empty()) j["detail"] = r.detail;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.detail.empty()) std::cout << "  -- " << r.detail;
            std::cout << "\n";
        }
        fails += !r.pass;
    }
    if (g.format != "json")
        std::cout << results.size() << " checks, " << fails << " failed\n";
    return fails ? 1 : 0;
}

json shell_report_json(const std::string& code, std::uint32_t ell, const DesignReport& r) {
    json j;
    j["code"] = code;
    j["ell"] = ell;
    j["t"] = r.t;
    j["method"] = method_name(r.method);
    j["is_design"] = r.is_design;
    j["lambda"] = r.lambda ? json(rat_to_string(*r.lambda)) : json(nullptr);
    if (r.witness) {
        j["witness"] = {{"low", r.witness->low},
                        {"high", r.witness->high},
                        {"low_count", rat_to_string(r.witness->low_count)},
                        {"high_count", rat_to_string(r.witness->high_count)}};
    } else {
        j["witness"] = nullptr;
    }
    if (r.harmonic_witness)
        j["witness"] = {{"k", r.harmonic_witness->first}, {"index", r.harmonic_witness->second}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi polynomials, harmonic weight enumerators and combinatorial design\n"
                 "tests for first-order Reed-Muller and extended Hamming codes, in exact\n"
                 "arithmetic."};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "seed for sampled modes (default 0)");
    app.add_option("--threads", g.threads, "enumeration worker threads (0 = all cores)");
    app.add_flag("--scalar", [](std::int64_t) { kernels::force_backend(kernels::Backend::Scalar); },
                 "disable SIMD kernels");

    std::function<int()> action;

    // ---- code ----
    auto* code_cmd = app.add_subcommand("code", "construct codes; print matrices, enumerators, shells");
    code_cmd->require_subcommand(1);
    code_cmd->fallthrough();
    {
        struct CodeArgs {
            int m = 3;
            CodeSource src;
            bool wenum = false, dim = false, gen = false;
            int shell_ell = -1;
            std::uint32_t ell = 0;
        };
        auto args = std::make_shared<CodeArgs>();

        auto add_outputs = [&](CLI::App* sub) {
            sub->add_flag("--wenum", args->wenum, "print the weight enumerator");
            sub->add_flag("--dim", args->dim, "print the dimension");
            sub->add_flag("--gen", args->gen, "print the generator matrix (default)");
            sub->add_option("--shell", args->shell_ell, "print the blocks of the weight-L shell");
        };
        auto emit = [args, &g](const BinaryCode& c) -> int {
            if (args->wenum)
                print_poly(weight_enumerator(c, g.threads), g);
            else if (args->dim)
                std::cout << c.dimension() << "\n";
            else if (args->shell_ell >= 0)
                print_blocks(shell(c, static_cast<std::uint32_t>(args->shell_ell)), g);
            else
                print_code(c, g);
            return 0;
        };

        auto* rm1 = code_cmd->add_subcommand("rm1", "RM(1,m)");
        rm1->fallthrough();
        rm1->add_option("-m,--m", args->m, "m >= 1")->required();
        add_outputs(rm1);
        rm1->callback([&action, args, emit] { action = [args, emit] { return emit(reed_muller_1(args->m)); }; });

        auto* eh = code_cmd->add_subcommand("ehamming", "extended Hamming H_{2^m}");
        eh->fallthrough();
        eh->add_option("-m,--m", args->m, "m >= 2")->required();
        add_outputs(eh);
        eh->callback([&action, args, emit] { action = [args, emit] { return emit(extended_hamming(args->m)); }; });

        auto* dual = code_cmd->add_subcommand("dual", "dual of a code");
        dual->fallthrough();
        args->src.add_flags(dual);
        add_outputs(dual);
        dual->callback([&action, args, emit] {
            action = [args, emit] { return emit(args->src.resolve().dual()); };
        });

        auto* wenum = code_cmd->add_subcommand("wenum", "weight enumerator of a code");
        wenum->fallthrough();
        args->src.add_flags(wenum);
        wenum->callback([&action, args, &g] {
            action = [args, &g] {
                print_poly(weight_enumerator(args->src.resolve(), g.threads), g);
                return 0;
            };
        });

        auto* sh = code_cmd->add_subcommand("shell", "supports of the weight-ell codewords");
        sh->fallthrough();
        args->src.add_flags(sh);
        sh->add_option("--ell", args->ell, "shell weight")->required();
        sh->callback([&action, args, &g] {
            action = [args, &g] {
                print_blocks(shell(args->src.resolve(), args->ell), g);
                return 0;
            };
        });
    }

    // ---- jacobi ----
    {
        auto* jac = app.add_subcommand("jacobi", "Jacobi polynomial J_{C,T}");
        jac->fallthrough();
        struct JacArgs {
            CodeSource src;
            std::string t_csv;
            std::string cls;
            bool closed = false, do_check = false;
        };
        auto args = std::make_shared<JacArgs>();
        args->src.add_flags(jac);
        jac->add_option("--t", args->t_csv, "comma-separated coordinate indices of T");
        jac->add_option("--class", args->cls, "canonical 4-set by class")
            ->check(CLI::IsMember({"indep", "dep"}));
        jac->add_flag("--closed", args->closed, "print the closed form instead of enumerating");
        jac->add_flag("--check", args->do_check, "compare enumeration against the closed form");
        jac->callback([&action, args, &g] {
            action = [args, &g]() -> int {
                const int m = args->src.rm1 >= 0 ? args->src.rm1 : args->src.ehamming;
                std::vector<std::uint32_t> t_set;
                TClass cls = TClass::AffinelyIndependent;
                bool have_class = false;
                if (!args->cls.empty()) {
                    if (m < 3) throw input_error("--class needs --rm1 or --ehamming with m >= 3");
                    cls = args->cls == "dep" ? TClass::AffinelyDependent
                                             : TClass::AffinelyIndependent;
                    const FourSet t = canonical_four_set(m, cls);
                    t_set.assign(t.points.begin(), t.points.end());
                    have_class = true;
                } else if (!args->t_csv.empty()) {
                    t_set = parse_indices(args->t_csv);
                } else {
                    throw input_error("provide --t or --class");
                }
                if (!have_class && t_set.size() == 4 && m >= 3) {
                    const FourSet t = make_four_set(m, {t_set[0], t_set[1], t_set[2], t_set[3]});
                    cls = classify_four_set(m, t);
                    have_class = true;
                }

                auto closed_form = [&]() -> Poly4 {
                    if (!have_class || m < 3)
                        throw input_error("closed form needs a 4-set on RM(1,m)/H_{2^m}, m >= 3");
                    return args->src.ehamming >= 0 ? rm1_dual_jacobi_closed(m, cls)
                                                   : rm1_jacobi_closed(m, cls);
                };

                if (args->do_check) {
                    const Poly4 j = jacobi(args->src.resolve(), t_set, g.threads);
                    const Poly4 c = closed_form();
                    if (j == c) {
                        std::cout << "OK\n";
                        return 0;
                    }
                    std::cout << "MISMATCH, difference:\n";
                    print_poly(j - c, g);
                    return 1;
                }
                if (args->closed) {
                    print_poly(closed_form(), g);
                    return 0;
                }
                print_poly(jacobi(args->src.resolve(), t_set, g.threads), g);
                return 0;
            };
        });
    }

    // ---- harm-basis ----
    {
        auto* hb = app.add_subcommand("harm-basis", "basis of the degree-k harmonic functions");
        hb->fallthrough();
        struct HbArgs {
            std::uint32_t n = 8, k = 4;
            std::uint64_t cap = kDefaultHarmCap;
        };
        auto args = std::make_shared<HbArgs>();
        hb->add_option("-n,--n", args->n, "point count")->required();
        hb->add_option("-k,--k", args->k, "degree")->required();
        hb->add_option("--cap", args->cap, "C(n,k) cap");
        hb->callback([&action, args, &g] {
            action = [args, &g] {
                const auto basis = harm_basis(args->n, args->k, args->cap);
                if (g.format == "json") {
                    std::cout << "[";
                    for (std::size_t i = 0; i < basis.size(); ++i)
                        std::cout << (i ? "," : "") << basis[i].fn().to_json();
                    std::cout << "]\n";
                } else {
                    std::cout << "dim " << basis.size() << "\n";
                    for (const auto& f : basis) std::cout << f.fn().to_json() << "\n";
                }
                return 0;
            };
        });
    }

    // ---- hwe ----
    {
        auto* hw = app.add_subcommand("hwe", "harmonic weight enumerator w_{C,f}");
        hw->fallthrough();
        struct HweArgs {
            CodeSource src;
            std::string f_file;
            bool use_corollary_f = false;
            std::string tau_csv = "0,1";
            std::string subspace_csv;
        };
        auto args = std::make_shared<HweArgs>();
        args->src.add_flags(hw);
        hw->add_option("--f", args->f_file, "harmonic function as subset-function JSON");
        hw->add_flag("--corollary-f", args->use_corollary_f,
                     "use the explicit degree-4 function built from the 3-(8,4,1) blocks");
        hw->add_option("--tau", args->tau_csv, "transposition for --corollary-f (default 0,1)");
        hw->add_option("--subspace", args->subspace_csv,
                       "3 basis vectors embedding --corollary-f into F_2^m, e.g. 1,2,4");
        hw->callback([&action, args, &g] {
            action = [args, &g]() -> int {
                const BinaryCode c = args->src.resolve();
                std::optional<HarmonicFn> f;
                if (args->use_corollary_f) {
                    const auto tau = parse_indices(args->tau_csv);
                    if (tau.size() != 2) throw input_error("--tau needs two indices");
                    std::optional<Subspace3> u;
                    if (!args->subspace_csv.empty()) {
                        const auto b = parse_indices(args->subspace_csv);
                        if (b.size() != 3) throw input_error("--subspace needs three vectors");
                        const int m = args->src.rm1 >= 0 ? args->src.rm1 : args->src.ehamming;
                        if (m < 3) throw input_error("--subspace needs --rm1/--ehamming with m >= 3");
                        u = make_subspace3(m, {b[0], b[1], b[2]});
                    }
                    f.emplace(corollary_f({tau[0], tau[1]}, u));
                } else if (!args->f_file.empty()) {
                    f.emplace(SubsetFn::from_json(read_file(args->f_file)));
                } else {
                    throw input_error("provide --f or --corollary-f");
                }
                print_poly(hwe(c, *f), g);
                return 0;
            };
        });
    }

    // ---- bachoc ----
    {
        auto* ba = app.add_subcommand("bachoc", "dualize a harmonic weight enumerator");
        ba->fallthrough();
        struct BaArgs {
            std::string wcf_file;
            std::uint32_t n = 0, k = 0;
            std::uint64_t size = 0;
        };
        auto args = std::make_shared<BaArgs>();
        ba->add_option("--wcf", args->wcf_file, "w_{C,f} as polynomial JSON")->required();
        ba->add_option("-n,--n", args->n, "code length")->required();
        ba->add_option("-k,--k", args->k, "harmonic degree")->required();
        ba->add_option("--size", args->size, "|C|")->required();
        ba->callback([&action, args, &g] {
            action = [args, &g] {
                const Poly4 wcf = Poly4::from_json(read_file(args->wcf_file));
                print_poly(bachoc_transform(wcf, args->n, args->k, Int(args->size)), g);
                return 0;
            };
        });
    }

    // ---- design-check ----
    {
        auto* dc = app.add_subcommand("design-check", "t-design tests on a shell or block file");
        dc->fallthrough();
        struct DcArgs {
            CodeSource src;
            std::string blocks_file;
            std::uint32_t blocks_n = 0;
            std::uint32_t ell = 0;
            bool have_ell = false;
            int t = 3;
            std::string method = "all";
            std::uint64_t sample = 0;
        };
        auto args = std::make_shared<DcArgs>();
        args->src.add_flags(dc);
        dc->add_option("--blocks", args->blocks_file, "block-set file (one block per line)");
        dc->add_option("--blocks-n", args->blocks_n, "point count for --blocks");
        dc->add_option("--ell", args->ell, "shell weight (with a code source)")
            ->each([args](const std::string&) { args->have_ell = true; });
        dc->add_option("--t", args->t, "design strength to test")->required();
        dc->add_option("--method", args->method, "direct | delsarte | jacobi | all")
            ->check(CLI::IsMember({"direct", "delsarte", "jacobi", "all"}));
        dc->add_option("--sample", args->sample,
                       "Jacobi route: sample this many T-sets instead of all");
        dc->callback([&action, args, &g] {
            action = [args, &g]() -> int {
                std::optional<BinaryCode> code;
                BlockSet blocks;
                std::string label;
                if (!args->blocks_file.empty()) {
                    if (!args->blocks_n) throw input_error("--blocks needs --blocks-n");
                    blocks = blockset_from_text(read_file(args->blocks_file), args->blocks_n);
                    label = args->blocks_file;
                } else {
                    code = args->src.resolve();
                    if (!args->have_ell) throw input_error("a code source needs --ell");
                    blocks = shell(*code, args->ell);
                    label = args->src.label();
                }

                std::vector<DesignReport> reports;
                if (args->method == "direct" || args->method == "all")
                    reports.push_back(is_t_design(blocks, args->t));
                if (args->method == "delsarte" || args->method == "all")
                    reports.push_back(delsarte_test(blocks, args->t));
                if (args->method == "jacobi" || args->method == "all") {
                    if (!code) throw input_error("the Jacobi route needs a code source, not --blocks");
                    SampleMode mode;
                    if (args->sample) mode = SampleMode{false, args->sample, g.seed};
                    reports.push_back(jacobi_design_test(*code, args->ell, args->t, mode,
                                                         kDefaultSubsetCap, g.threads));
                }

                bool all_agree = true;
                for (const auto& r : reports) {
                    if (g.format == "json")
                        std::cout << shell_report_json(label, args->ell, r).dump() << "\n";
                    else
                        std::cout << method_name(r.method) << ": "
                                  << (r.is_design
                                          ? "t=" + std::to_string(r.t) + " design, lambda = " +
                                                (r.lambda ? rat_to_string(*r.lambda) : "?")
                                          : "not a t=" + std::to_string(r.t) + " design" +
                                                (r.note.empty() ? "" : " (" + r.note + ")"))
                                  << "\n";
                    all_agree = all_agree && r.is_design == reports.front().is_design;
                }
                if (!all_agree) throw verification_error("design-test methods disagree");
                return 0;
            };
        });
    }

    // ---- verify ----
    {
        auto* ve = app.add_subcommand("verify", "run the named verification suite");
        ve->fallthrough();
        struct VeArgs {
            std::string target;
            std::string m_range = "3..8";
            std::string route = "both";
        };
        auto args = std::make_shared<VeArgs>();
        ve->add_option("target", args->target, "thm11 | thm12 | lemma31 | lemma41 | corollary | all")
            ->required()
            ->check(CLI::IsMember({"thm11", "thm12", "lemma31", "lemma41", "corollary", "all"}));
        ve->add_option("--m", args->m_range, "m range, e.g. 3..8 or a single value");
        ve->add_option("--route", args->route, "corollary route")
            ->check(CLI::IsMember({"jacobi", "harmonic", "both"}));
        ve->add_flag("--slow", g.slow, "include the 2^26-codeword dual enumeration checks");
        ve->callback([&action, args, &g] {
            action = [args, &g]() -> int {
                VerifyOptions opt;
                std::tie(opt.m_lo, opt.m_hi) = parse_m_range(args->m_range);
                if (opt.m_lo < 3 || opt.m_hi < opt.m_lo)
                    throw input_error("m range must satisfy 3 <= lo <= hi");
                opt.slow = g.slow;
                opt.threads = g.threads;
                opt.seed = g.seed;

                std::vector<CheckResult> results;
                if (args->target == "thm11") results = verify_thm11(opt);
                else if (args->target == "thm12") results = verify_thm12(opt);
                else if (args->target == "lemma31") results = verify_lemma31(opt);
                else if (args->target == "lemma41") results = verify_lemma41(opt);
                else if (args->target == "corollary") {
                    results = verify_corollary_suite(opt);
                    // per-(shell, t) reports, as JSON objects
                    if (g.format == "json" && args->route != "skip") {
                        const Route route = args->route == "jacobi"    ? Route::Jacobi
                                            : args->route == "harmonic" ? Route::Harmonic
                                                                         : Route::Both;
                        for (int m = opt.m_lo; m <= std::min(opt.m_hi, 5); ++m) {
                            const CorollaryReport rep = verify_corollary(m, route, opt.threads);
                            for (const auto& s : rep.shells) {
                                json j{{"code", s.code},     {"ell", s.ell},
                                       {"trivial", s.trivial}, {"three_design", s.three_design},
                                       {"four_design_refuted", s.four_design_refuted},
                                       {"jacobi_gap", rat_to_string(s.jacobi_gap)},
                                       {"hwe_coeff", rat_to_string(s.hwe_coeff)},
                                       {"lambda3", s.lambda3 ? json(rat_to_string(*s.lambda3))
                                                             : json(nullptr)}};
                                std::cout << j.dump() << "\n";
                            }
                        }
                    }
                } else {
                    results = verify_all(opt);
                }
                return run_checks(results, g);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 2;
    } catch (const verification_error& e) {
        std::cerr << "verification: " << e.what() << "\n";
        return 1;
    }
}
