#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "expr.hpp"
#include "hyperlab/criterion.hpp"
#include "hyperlab/error.hpp"
#include "hyperlab/hardy.hpp"
#include "hyperlab/json_io.hpp"
#include "hyperlab/moebius.hpp"
#include "hyperlab/shift.hpp"

namespace hyperlab::cli {

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out = "-";
    unsigned threads = 1;
};

struct Outcome {
    Json report;
    std::optional<std::string> csv;  ///< set by subcommands that have a per-n table
    int code = kDefinitive;
};

using Runner = std::function<Outcome(const Globals&)>;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

int verdict_code(Verdict v) { return v == Verdict::UndeterminedAtHorizon ? kUndetermined : kDefinitive; }

// Inline weight rule flags shared by salas and refute.
struct WeightFlags {
    std::string file;
    std::optional<double> constant;
    std::vector<double> periodic;
    std::vector<double> piecewise;
    long breakpoint = 0;

    void attach(CLI::App* app) {
        auto* f = app->add_option("--weights", file, "WeightSequence JSON file");
        auto* c = app->add_option("--constant", constant, "constant weight w_j = c");
        auto* p = app->add_option("--periodic", periodic, "periodic weights, anchored at j = 0");
        auto* pw = app->add_option("--piecewise", piecewise, "two values: w_j for j <= breakpoint, then for j > breakpoint")
                       ->expected(2);
        app->add_option("--breakpoint", breakpoint, "piecewise breakpoint")->capture_default_str();
        f->excludes(c)->excludes(p)->excludes(pw);
        c->excludes(p)->excludes(pw);
        p->excludes(pw);
    }

    WeightSequence build(Axis axis) const {
        if (!file.empty()) {
            WeightSequence w = weight_sequence_from_json(read_json_file(file));
            if (w.axis() != axis) {
                throw InputError("weights file axis does not match the requested shift");
            }
            return w;
        }
        if (constant) {
            return WeightSequence::constant(axis, *constant);
        }
        if (!periodic.empty()) {
            return WeightSequence::periodic(axis, periodic);
        }
        if (!piecewise.empty()) {
            if (axis != Axis::Integers) {
                throw InputError("--piecewise needs a bilateral shift");
            }
            return WeightSequence::piecewise(piecewise[0], piecewise[1], breakpoint);
        }
        throw InputError("no weights given: use --weights, --constant, --periodic or --piecewise");
    }
};

Runner add_salas(CLI::App& root) {
    auto* app = root.add_subcommand("salas", "Salas hypercyclicity test for a weighted backward shift");
    struct State {
        WeightFlags weights;
        bool unilateral = false;
        bool bilateral = false;
        std::size_t horizon = 64;
        double threshold = 1e6;
        double eps = 0.1;
        long q = 1;
    };
    auto s = std::make_shared<State>();
    s->weights.attach(app);
    auto* u = app->add_flag("--unilateral", s->unilateral, "shift on l^p(N)");
    auto* b = app->add_flag("--bilateral", s->bilateral, "shift on l^p(Z)");
    u->excludes(b);
    app->add_option("--horizon", s->horizon, "largest n scanned")->capture_default_str();
    app->add_option("--threshold", s->threshold, "unilateral: product level counted as evidence")->capture_default_str();
    app->add_option("--eps", s->eps, "bilateral: epsilon")->capture_default_str();
    app->add_option("--q", s->q, "bilateral: index range |j| <= q")->capture_default_str();
    return [s](const Globals& g) {
        if (s->unilateral == s->bilateral) {
            throw InputError("pick exactly one of --unilateral or --bilateral");
        }
        if (s->unilateral) {
            const auto r = salas_unilateral(s->weights.build(Axis::Natural), s->horizon, s->threshold);
            return Outcome{to_json(r), std::nullopt, verdict_code(r.verdict)};
        }
        const auto r = salas_bilateral(s->weights.build(Axis::Integers), {s->eps, s->q, s->horizon}, g.threads);
        return Outcome{to_json(r), std::nullopt, verdict_code(r.verdict)};
    };
}

Runner add_criterion(CLI::App& root) {
    auto* app = root.add_subcommand("criterion", "Check the three sampled conditions of the weak hypercyclicity criterion");
    struct State {
        std::string instance;
        CriterionTolerances tol;
    };
    auto s = std::make_shared<State>();
    app->add_option("--instance", s->instance, "CriterionInstance JSON file")->required();
    app->add_option("--coord-tol", s->tol.coord_tol, "condition 1 coordinate tolerance")->capture_default_str();
    app->add_option("--norm-bound", s->tol.norm_bound, "condition 1 norm cap")->capture_default_str();
    app->add_option("--decay-tol", s->tol.decay_tol, "condition 3 bound on the final ||S_k z||")->capture_default_str();
    app->add_option("--exact-tol", s->tol.exact_tol, "condition 3 bound on ||T^n S_n z - z||")->capture_default_str();
    return [s](const Globals&) {
        const CriterionInstance inst = criterion_instance_from_json(read_json_file(s->instance));
        const CriterionReport r = check_criterion(inst, s->tol);
        std::string csv = "n,k,sample,residual_a,residual_b\n";
        for (std::size_t i = 0; i < r.cond3.residual_a.size(); ++i) {
            for (std::size_t k = 0; k < inst.nk.size(); ++k) {
                csv += std::to_string(inst.nk[k]) + "," + std::to_string(k + 1) + "," + std::to_string(i) + "," +
                       fmt(r.cond3.residual_a[i][k]) + "," + fmt(r.cond3.residual_b[i][k]) + "\n";
            }
        }
        return Outcome{to_json(r), std::move(csv), r.overall ? kDefinitive : kUndetermined};
    };
}

Runner add_transitivity(CLI::App& root) {
    auto* app = root.add_subcommand("transitivity", "Search n with T^n G meeting a weak neighborhood W");
    struct State {
        std::string instance;
        std::optional<std::size_t> horizon;
        std::optional<std::size_t> start;
    };
    auto s = std::make_shared<State>();
    app->add_option("--instance", s->instance, "JSON file {weights, g_center, g_radius, w, horizon, start}")
        ->required();
    app->add_option("--horizon", s->horizon, "override the file horizon");
    app->add_option("--start", s->start, "smallest n tried (default 0)");
    return [s](const Globals&) {
        const Json j = read_json_file(s->instance);
        for (const char* key : {"weights", "g_center", "g_radius", "w"}) {
            if (!j.contains(key)) {
                throw InputError(std::string("missing field '") + key + "'");
            }
        }
        const WeightSequence w = weight_sequence_from_json(j.at("weights"));
        const WindowVector g = window_vector_from_json(j.at("g_center"), w.axis());
        const WeakNeighborhood nbhd = weak_neighborhood_from_json(j.at("w"), w.axis());
        if (!j.at("g_radius").is_number()) {
            throw InputError("field 'g_radius' must be a number");
        }
        const std::size_t horizon = s->horizon.value_or(j.value("horizon", std::size_t{64}));
        const std::size_t start = s->start.value_or(j.value("start", std::size_t{0}));
        const auto r = transitivity_witness(BackwardShift(w), g, j.at("g_radius").get<double>(), nbhd, horizon, start);
        return Outcome{to_json(r), std::nullopt, verdict_code(r.verdict)};
    };
}

Runner add_refute(CLI::App& root) {
    auto* app = root.add_subcommand("refute", "Certify that a bilateral shift violates one of the two conjectured conditions");
    struct State {
        WeightFlags weights;
        std::vector<std::size_t> nk;
        std::optional<std::size_t> doubling;
        std::uint64_t n_max = 1000;
        std::optional<long> j_range;
    };
    auto s = std::make_shared<State>();
    s->weights.attach(app);
    auto* nk = app->add_option("--nk", s->nk, "strictly increasing n_k");
    auto* d = app->add_option("--doubling", s->doubling, "use n_k = 1, 2, 4, ... up to this value");
    nk->excludes(d);
    app->add_option("--nmax", s->n_max, "largest scale N examined")->capture_default_str();
    app->add_option("--j-range", s->j_range, "sup over |j| <= this (default 10 max n_k)");
    return [s](const Globals& g) {
        std::vector<std::size_t> nk = s->nk;
        if (s->doubling) {
            for (std::size_t n = 1; n <= *s->doubling; n *= 2) {
                nk.push_back(n);
            }
        }
        if (nk.empty()) {
            throw InputError("n_k is empty: pass --nk or --doubling");
        }
        const long j_range = s->j_range.value_or(10 * static_cast<long>(*std::max_element(nk.begin(), nk.end())));
        const auto r = refute_conjecture(s->weights.build(Axis::Integers), nk, s->n_max, j_range, g.threads);
        std::string csv = "n,sup_backward_log10,forward_at_zero_log10\n";
        for (std::size_t k = 0; k < r.sup_backward_log10.size(); ++k) {
            csv += std::to_string(nk[k]) + "," + fmt(r.sup_backward_log10[k]) + "," + fmt(r.forward_at_zero_log10[k]) +
                   "\n";
        }
        return Outcome{to_json(r), std::move(csv),
                       r.violated == ConjectureCondition::Undetermined ? kUndetermined : kDefinitive};
    };
}

// --symbol EXPR or --coeffs a b c d or --map FILE.
struct MapFlags {
    std::string symbol;
    std::vector<std::string> coeffs;
    std::string file;

    void attach(CLI::App* app) {
        auto* s = app->add_option("--symbol", symbol, "map as text, e.g. \"z/(2-z)\"");
        auto* c = app->add_option("--coeffs", coeffs, "a b c d of (az+b)/(cz+d)")->expected(4);
        auto* f = app->add_option("--map", file, "MoebiusMap JSON file");
        s->excludes(c)->excludes(f);
        c->excludes(f);
    }

    MoebiusMap build() const {
        if (!symbol.empty()) {
            return parse_symbol(symbol);
        }
        if (!coeffs.empty()) {
            return MoebiusMap(parse_complex(coeffs[0]), parse_complex(coeffs[1]), parse_complex(coeffs[2]),
                              parse_complex(coeffs[3]));
        }
        if (!file.empty()) {
            return moebius_from_json(read_json_file(file));
        }
        throw InputError("no map given: use --symbol, --coeffs or --map");
    }
};

Runner add_moebius(CLI::App& root) {
    auto* app = root.add_subcommand("moebius", "Linear fractional self-maps of the disk");
    app->require_subcommand(1);

    auto* classify_app = app->add_subcommand("classify", "Kind, fixed points and half-plane form");
    auto classify_map = std::make_shared<MapFlags>();
    classify_map->attach(classify_app);

    auto* iterate_app = app->add_subcommand("iterate", "n-th iterate, optionally evaluated at z");
    struct IterateState {
        MapFlags map;
        std::uint64_t n = 1;
        std::string z;
    };
    auto it = std::make_shared<IterateState>();
    it->map.attach(iterate_app);
    iterate_app->add_option("--n", it->n, "iterate count")->capture_default_str();
    iterate_app->add_option("--z", it->z, "evaluation point");

    auto* identity_app = app->add_subcommand("identity-check", "Closed forms for the parabolic orbit against iteration");
    struct IdentityState {
        std::string a = "1";
        std::string z = "0.5";
        std::uint64_t n = 1;
        double tol = 1e-9;
    };
    auto id = std::make_shared<IdentityState>();
    identity_app->add_option("--a", id->a, "translation, Re a > 0")->capture_default_str();
    identity_app->add_option("--z", id->z, "point in the disk")->capture_default_str();
    identity_app->add_option("--n", id->n, "iterate count")->capture_default_str();
    identity_app->add_option("--tol", id->tol, "absolute tolerance for both identities")->capture_default_str();

    return [=](const Globals&) {
        if (classify_app->parsed()) {
            const MoebiusMap m = classify_map->build();
            const MapClass c = classify(m);
            Json j = to_json(c);
            if (c.kind == MapKind::Parabolic) {
                j["half_plane"] = to_json(to_half_plane(m));
            }
            return Outcome{std::move(j), std::nullopt, kDefinitive};
        }
        if (iterate_app->parsed()) {
            const MoebiusMap m = iterate(it->map.build(), it->n);
            Json j{{"test", "moebius_iterate"}, {"n", it->n}, {"map", to_json(m)}};
            if (!it->z.empty()) {
                j["value"] = complex_to_json(hyperlab::apply(m, parse_complex(it->z)));
            }
            return Outcome{std::move(j), std::nullopt, kDefinitive};
        }
        const auto r = parabolic_identity_check(parse_complex(id->a), parse_complex(id->z), id->n);
        const bool ok = r.modulus_error < id->tol && r.difference_error < id->tol;
        return Outcome{to_json(r), std::nullopt, ok ? kDefinitive : kUndetermined};
    };
}

Runner add_hardy(CLI::App& root) {
    auto* app = root.add_subcommand("hardy", "Composition operators on truncated H^2");
    app->require_subcommand(1);

    auto* decay_app = app->add_subcommand("decay", "d_n = |f(phi_n(z)) - f(phi_n(0))| for the parabolic map phi_a");
    struct DecayState {
        std::string f = "identity";
        std::string a = "1";
        std::string z = "0.5";
        std::size_t n_max = 1000;
    };
    auto dc = std::make_shared<DecayState>();
    decay_app->add_option("--f", dc->f, "polynomial in z or \"identity\"")->capture_default_str();
    decay_app->add_option("--a", dc->a, "translation, Re a > 0")->capture_default_str();
    decay_app->add_option("--z", dc->z, "point in the disk")->capture_default_str();
    decay_app->add_option("--nmax", dc->n_max, "largest n")->capture_default_str();

    auto* estimate_app = app->add_subcommand("estimate", "Pointwise growth bound |f(z) - f(w)| <= rhs");
    struct EstimateState {
        std::string f;
        std::string z;
        std::string w;
        std::size_t pairs = 0;
        std::size_t degree = 16;
    };
    auto es = std::make_shared<EstimateState>();
    estimate_app->add_option("--f", es->f, "polynomial in z");
    estimate_app->add_option("--z", es->z, "first point");
    estimate_app->add_option("--w", es->w, "second point");
    estimate_app->add_option("--pairs", es->pairs, "random (f, z, w) triples drawn from --seed");
    estimate_app->add_option("--degree", es->degree, "largest random degree")->capture_default_str();

    auto* obstruct_app = app->add_subcommand("obstruct", "f(phi_n(p)) stays at f(p) for an interior fixed point p");
    struct ObstructState {
        MapFlags map;
        std::string f = "identity";
        std::size_t n = 1000;
        std::string point;
        double tol = 1e-9;
    };
    auto ob = std::make_shared<ObstructState>();
    ob->map.attach(obstruct_app);
    obstruct_app->add_option("--f", ob->f, "polynomial in z")->capture_default_str();
    obstruct_app->add_option("--n", ob->n, "iterations")->capture_default_str();
    obstruct_app->add_option("--point", ob->point, "fixed point to use (required for the identity map)");
    obstruct_app->add_option("--tol", ob->tol, "max deviation accepted")->capture_default_str();

    auto* cluster_app = app->add_subcommand("cluster", "Spread of f(phi_n(z)) over a grid at n/4, n/2, n");
    struct ClusterState {
        std::string f = "identity";
        std::string a = "1";
        std::vector<std::string> grid{"0", "0.5", "-0.5", "0.5i"};
        std::uint64_t n = 1000;
    };
    auto cl = std::make_shared<ClusterState>();
    cluster_app->add_option("--f", cl->f, "polynomial in z")->capture_default_str();
    cluster_app->add_option("--a", cl->a, "translation, Re a > 0")->capture_default_str();
    cluster_app->add_option("--grid", cl->grid, "points in the disk")->capture_default_str();
    cluster_app->add_option("--n", cl->n, "largest iterate")->capture_default_str();

    return [=](const Globals& g) {
        if (decay_app->parsed()) {
            const auto r = orbit_decay(parse_function(dc->f), parse_complex(dc->a), parse_complex(dc->z), dc->n_max,
                                       g.threads);
            std::string csv = "n,d_n,d_n_sqrt_n\n";
            for (std::size_t i = 0; i < r.distances.size(); ++i) {
                const double n = static_cast<double>(i + 1);
                csv += std::to_string(i + 1) + "," + fmt(r.distances[i]) + "," + fmt(r.distances[i] * std::sqrt(n)) +
                       "\n";
            }
            return Outcome{to_json(r), std::move(csv), r.bounded ? kDefinitive : kUndetermined};
        }
        if (estimate_app->parsed()) {
            if (es->pairs == 0) {
                if (es->f.empty() || es->z.empty() || es->w.empty()) {
                    throw InputError("estimate needs --f, --z and --w, or --pairs");
                }
                const auto r = growth_estimate_check(parse_function(es->f), parse_complex(es->z), parse_complex(es->w));
                return Outcome{to_json(r), std::nullopt, r.holds ? kDefinitive : kUndetermined};
            }
            std::mt19937_64 rng(g.seed);
            auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1p-53; };
            auto disk_point = [&] { return std::polar(std::sqrt(unit()) * (1.0 - 1e-6), 2.0 * std::numbers::pi * unit()); };
            std::size_t violations = 0;
            std::size_t tight = 0;
            double worst_ratio = 0.0;
            for (std::size_t i = 0; i < es->pairs; ++i) {
                const std::size_t degree = static_cast<std::size_t>(unit() * static_cast<double>(es->degree + 1));
                std::vector<Complex> c(std::min(degree, es->degree) + 1);
                for (auto& x : c) {
                    x = {2.0 * unit() - 1.0, 2.0 * unit() - 1.0};
                }
                const Complex z = disk_point();
                const Complex w = disk_point();
                const auto r = growth_estimate_check(HardyFunction(std::move(c)), z, w);
                violations += r.holds ? 0 : 1;
                tight += r.tight ? 1 : 0;
                if (r.rhs > 0.0) {
                    worst_ratio = std::max(worst_ratio, r.lhs / r.rhs);
                }
            }
            Json j{{"test", "growth_estimate_sweep"},
                   {"seed", g.seed},
                   {"pairs", es->pairs},
                   {"degree", es->degree},
                   {"violations", violations},
                   {"tight", tight},
                   {"worst_ratio", worst_ratio}};
            return Outcome{std::move(j), std::nullopt, violations == 0 ? kDefinitive : kUndetermined};
        }
        if (obstruct_app->parsed()) {
            std::optional<Complex> p;
            if (!ob->point.empty()) {
                p = parse_complex(ob->point);
            }
            const auto r = fixed_point_obstruction(ob->map.build(), parse_function(ob->f), ob->n, p);
            return Outcome{to_json(r), std::nullopt, r.max_deviation < ob->tol ? kDefinitive : kUndetermined};
        }
        std::vector<Complex> grid;
        for (const auto& s : cl->grid) {
            grid.push_back(parse_complex(s));
        }
        const auto r = constant_cluster_check(parse_function(cl->f), parse_complex(cl->a), grid, cl->n);
        std::string csv = "n,spread\n";
        for (std::size_t i = 0; i < r.steps.size(); ++i) {
            csv += std::to_string(r.steps[i]) + "," + fmt(r.spreads[i]) + "\n";
        }
        return Outcome{to_json(r), std::move(csv), r.decreasing ? kDefinitive : kUndetermined};
    };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperlab: numeric checks for hypercyclicity of weighted shifts and composition operators"};
    app.footer(
        "Exit status: 0 definitive verdict, 1 input error, 2 undetermined at horizon or failed check.\n"
        "Command-line flags override values read from --config.");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "seed for randomized subcommands")->capture_default_str();
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--out", g.out, "output path, - for standard output")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads for parallel sweeps")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app.set_config("--config", "", "TOML/INI file with default option values");

    const std::vector<std::pair<CLI::App*, Runner>> runners = [&] {
        std::vector<std::pair<CLI::App*, Runner>> r;
        const std::pair<const char*, Runner (*)(CLI::App&)> table[] = {
            {"salas", add_salas}, {"criterion", add_criterion}, {"transitivity", add_transitivity},
            {"refute", add_refute}, {"moebius", add_moebius},   {"hardy", add_hardy}};
        for (const auto& [name, add] : table) {
            Runner fn = add(app);
            r.emplace_back(app.get_subcommand(name), std::move(fn));
        }
        return r;
    }();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kDefinitive;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kDefinitive;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        for (const auto& [sub, runner] : runners) {
            if (!sub->parsed()) {
                continue;
            }
            Outcome o = runner(g);
            std::string text;
            if (g.format == "csv") {
                if (!o.csv) {
                    throw InputError("csv output is only available for criterion, refute, hardy decay and hardy cluster");
                }
                text = std::move(*o.csv);
            } else {
                text = o.report.dump(2) + "\n";
            }
            if (g.out == "-") {
                out << text;
            } else {
                std::ofstream file(g.out, std::ios::binary);
                if (!(file << text)) {
                    throw InputError("cannot write '" + g.out + "'");
                }
            }
            return o.code;
        }
        throw InputError("no subcommand given");
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << "\n";
    }
    return kInputError;
}

}  // namespace hyperlab::cli
