#include "exotic/cli.hpp"

#include "exotic/bipartitions.hpp"
#include "exotic/characters.hpp"
#include "exotic/errors.hpp"
#include "exotic/exoticlin.hpp"
#include "exotic/json_io.hpp"
#include "exotic/kostant.hpp"
#include "exotic/rootdata.hpp"
#include "exotic/sections.hpp"
#include "exotic/simd/cone_mask.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace exotic::cli {

using json_io::json;

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

long long parse_positive(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size() || v <= 0)
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw DomainError("config knob " + key + " needs a positive integer, got \"" + value + "\"");
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Inputs {
    int n = -1;
    std::string mu, nu, lambda, weights, file, route = "both", kind = "p";
    int bound = -1;
    bool dot = false;
    bool twisted = false;
};

class Session {
  public:
    Session(Config cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    void check_rank(int n) const
    {
        if (n < 0)
            throw DomainError("--n must be given and nonnegative");
        if (n > cfg_.rank_cap)
            throw DomainError("rank " + std::to_string(n) + " exceeds rank_cap=" + std::to_string(cfg_.rank_cap));
    }

    void check_degree(int degree, const std::string& what) const
    {
        if (degree > cfg_.degree_cap)
            throw DomainError(what + " has |.|_1 = " + std::to_string(degree) + ", exceeding degree_cap=" +
                              std::to_string(cfg_.degree_cap));
    }

    Weight weight(const std::string& text, const std::string& what, int n) const
    {
        if (text.empty())
            throw DomainError("--" + what + " is required");
        Weight w = json_io::to_weight(json_io::parse(text, "--" + what), "--" + what);
        if (w.rank() != n)
            throw DomainError("--" + what + " has " + std::to_string(w.rank()) + " entries but --n is " +
                              std::to_string(n));
        check_degree(w.l1(), "--" + what);
        return w;
    }

    Bipartition bipartition(const Inputs& in) const
    {
        const auto mu = json_io::to_partition(json_io::parse(in.mu.empty() ? "[]" : in.mu, "--mu"), "--mu");
        const auto nu = json_io::to_partition(json_io::parse(in.nu.empty() ? "[]" : in.nu, "--nu"), "--nu");
        Bipartition b{mu, nu};
        check_rank(b.size());
        return b;
    }

    ExoticPair pair(const Inputs& in) const
    {
        if (in.file.empty())
            throw DomainError("--file is required");
        ExoticPair p = json_io::to_pair(json_io::parse(read_file(in.file), in.file));
        check_rank(p.n());
        return p;
    }

    void emit(const json& j) const { out_ << j.dump() << '\n'; }

    void mult(const Inputs& in) const
    {
        check_rank(in.n);
        const Weight mu = weight(in.mu, "mu", in.n);
        const Weight lambda = weight(in.lambda, "lambda", in.n);
        json j;
        std::optional<mpz_class> a, b;
        if (in.route == "a" || in.route == "both")
            a = h0_mult(mu, lambda).value;
        if (in.route == "b" || in.route == "both")
            b = h0_mult_subsets(mu, lambda);
        if (a)
            j["a"] = json_io::from_integer(*a);
        if (b)
            j["b"] = json_io::from_integer(*b);
        if (a && b) {
            j["agree"] = *a == *b;
            if (*a != *b) {
                emit(j);
                throw InternalError("routes disagree for mu=" + mu.str() + ", lambda=" + lambda.str());
            }
        }
        emit(j);
    }

    void kostant(const Inputs& in) const
    {
        check_rank(in.n);
        const Weight mu = weight(in.mu, "mu", in.n);
        mpz_class value;
        if (in.kind == "p")
            value = kostant_p(mu);
        else if (in.kind == "p'")
            value = kostant_p_exotic(mu);
        else
            throw DomainError("--kind must be p or p'");
        emit({{"kind", in.kind}, {"mu", json_io::from_weight(mu)}, {"value", json_io::from_integer(value)}});
    }

    void subset_identity(const Inputs& in) const
    {
        check_rank(in.n);
        const Weight mu = weight(in.mu, "mu", in.n);
        const bool ok = subset_identity_check(mu);
        emit({{"mu", json_io::from_weight(mu)}, {"holds", ok}});
        if (!ok)
            throw InternalError("subset identity fails at " + mu.str());
    }

    void bwb_cmd(const Inputs& in) const
    {
        check_rank(in.n);
        const Weight lambda = weight(in.lambda, "lambda", in.n);
        const auto r = bwb(lambda);
        if (!r)
            emit({{"singular", true}});
        else
            emit({{"singular", false}, {"sign", r->sign}, {"weight", json_io::from_weight(r->weight)}});
    }

    void weights(const Inputs& in) const
    {
        check_rank(in.n);
        const Weight mu = weight(in.mu, "mu", in.n);
        const auto table = all_weights(mu);
        json list = json::array();
        for (const auto& [w, m] : table.entries)
            list.push_back({{"weight", json_io::from_weight(w)}, {"mult", json_io::from_integer(m)}});
        emit({{"highest", json_io::from_weight(mu)}, {"dim", json_io::from_integer(weyl_dim(mu))}, {"weights", list}});
    }

    void conv(const Inputs& in) const
    {
        check_rank(in.n);
        const Weight mu = weight(in.mu, "mu", in.n);
        const Weight lambda = weight(in.lambda, "lambda", in.n);
        if (in.twisted)
            emit({{"in", in_tconv(lambda, mu)}, {"in_interior", in_tconv0(lambda, mu)}});
        else
            emit({{"in", in_conv(lambda, mu)}, {"in_interior", in_conv0(lambda, mu)}});
    }

    void quasi_order_cmd(const Inputs& in) const
    {
        check_rank(in.n);
        const json list = json_io::parse(in.weights, "--weights");
        if (!list.is_array())
            throw DomainError("--weights must be an array of weights");
        std::vector<Weight> ws;
        for (const auto& w : list) {
            ws.push_back(json_io::to_weight(w, "--weights entry"));
            if (ws.back().rank() != in.n)
                throw DomainError("--weights entry " + ws.back().str() + " does not have rank " + std::to_string(in.n));
        }
        json out = json::array();
        for (const auto& w : quasi_order(std::move(ws)))
            out.push_back(json_io::from_weight(w));
        emit({{"order", out}});
    }

    void decompose(const Inputs& in) const
    {
        check_rank(in.n);
        const Weight lambda = weight(in.lambda, "lambda", in.n);
        if (in.bound < 0)
            throw DomainError("--bound is required");
        check_degree(in.bound, "--bound");
        json list = json::array();
        for (const auto& [mu, m] : h0_decompose(lambda, in.bound))
            list.push_back({{"mu", json_io::from_weight(mu)}, {"mult", json_io::from_integer(m)}});
        emit({{"lambda", json_io::from_weight(lambda)}, {"bound", in.bound}, {"components", list}});
    }

    void poset(const Inputs& in) const
    {
        check_rank(in.n);
        if (in.dot) {
            out_ << emit_dot(in.n);
            return;
        }
        const HasseDiagram h = hasse(in.n);
        json nodes = json::array(), edges = json::array();
        for (const auto& b : h.nodes) {
            json node = json_io::from_bipartition(b);
            node["c_distinguished"] = is_c_distinguished(b);
            nodes.push_back(node);
        }
        for (const auto& [lo, up] : h.edges)
            edges.push_back({lo, up});
        emit({{"nodes", nodes}, {"edges", edges}});
    }

    void phic(const Inputs& in) const { emit({{"lambda", json_io::from_partition(phi_c(bipartition(in)))}}); }

    void collapse_cmd(const Inputs& in) const { emit(json_io::from_bipartition(collapse(bipartition(in)))); }

    void filtration(const Inputs& in) const
    {
        const Bipartition b = bipartition(in);
        const FiltrationProfile profile = filtration_dims(b);
        json dims = json::object();
        for (const auto& [a, d] : profile.dims())
            dims[std::to_string(a)] = d;
        emit({{"lambda", json_io::from_partition(phi_c(b))}, {"dim", profile.dim()}, {"dims", dims}});
    }

    void orbit_identify(const Inputs& in) const { emit(json_io::from_bipartition(orbit_of(pair(in)))); }

    void representative_cmd(const Inputs& in) const { emit(json_io::from_pair(representative(bipartition(in)))); }

    void adapted(const Inputs& in) const
    {
        const ExoticPair p = pair(in);
        AdaptedSearchStats stats;
        IsotropicFiltration filt;
        try {
            filt = adapted_filtration(p, cfg_.closure_depth, &stats);
        } catch (const NotFound& e) {
            throw NotFound(std::string(e.what()) + " (raise closure_depth to search further)");
        }
        const Bipartition b = orbit_of(p);
        json levels = json::array();
        for (const auto& [a, s] : filt.levels) {
            json basis = json::array();
            for (const auto& v : s.basis())
                basis.push_back(json_io::from_vector(v));
            levels.push_back({{"a", a}, {"dim", s.dim()}, {"basis", basis}});
        }
        emit({{"bipartition", json_io::from_bipartition(b)},
              {"omega", json_io::from_matrix(filt.space.omega)},
              {"levels", levels},
              {"verified", verify_adapted(filt, p, b)},
              {"lattice_size", stats.lattice_size},
              {"rounds", stats.rounds}});
    }

    bool sweep(const Inputs& in) const
    {
        check_rank(in.n);
        if (in.bound < 0)
            throw DomainError("--bound is required");
        check_degree(in.bound, "--bound");
        const SweepReport report = sweep_grid(in.n, in.bound, cfg_.threads);
        json bad = json::array();
        for (const auto& c : report.cells)
            for (const auto& v : c.violations)
                bad.push_back({{"mu", json_io::from_weight(c.mu)},
                               {"lambda", json_io::from_weight(c.lambda)},
                               {"a", c.route_a ? json_io::from_integer(*c.route_a) : json(nullptr)},
                               {"b", json_io::from_integer(c.route_b)},
                               {"reason", v}});
        emit({{"n", in.n},
              {"bound", in.bound},
              {"cells", report.cells.size()},
              {"violations", bad},
              {"ok", bad.empty()}});
        return bad.empty();
    }

  private:
    Config cfg_;
    std::ostream& out_;
};

} // namespace

void Config::set(const std::string& key, const std::string& value)
{
    if (key == "rank_cap")
        rank_cap = static_cast<int>(parse_positive(key, value));
    else if (key == "degree_cap")
        degree_cap = static_cast<int>(parse_positive(key, value));
    else if (key == "closure_depth")
        closure_depth = static_cast<int>(parse_positive(key, value));
    else if (key == "cache_bytes")
        cache_bytes = static_cast<std::size_t>(parse_positive(key, value));
    else if (key == "threads")
        threads = static_cast<int>(parse_positive(key, value));
    else
        throw DomainError("unknown config key \"" + key + "\"");
}

void Config::load_file(const std::string& path)
{
    std::istringstream in(read_file(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line.substr(0, line.find('#')));
        if (t.empty())
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw DomainError(path + ":" + std::to_string(lineno) + ": expected key=value");
        set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

void Config::validate() const
{
    if (rank_cap <= 0 || degree_cap <= 0 || closure_depth <= 0 || cache_bytes == 0 || threads <= 0)
        throw DomainError("all config caps must be positive");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations on the exotic nilpotent cone of Sp(2n)", "exotic"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");

    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
    std::string simd = "auto";
    app.add_option("--config", config_path, "key=value config file (default: $EXOTIC_CONFIG)");
    for (const char* knob : {"rank-cap", "degree-cap", "closure-depth", "cache-bytes", "threads"}) {
        std::string key(knob);
        for (auto& c : key)
            if (c == '-')
                c = '_';
        app.add_option_function<std::string>(
            std::string("--") + knob, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); },
            "override config " + key);
    }
    app.add_option("--simd", simd, "cone-prefilter kernel: auto, scalar or avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    Inputs in;
    std::function<void(Session&)> action;
    std::function<bool(Session&)> checked_action;

    auto sub = [&](const char* name, const char* desc) { return app.add_subcommand(name, desc); };
    auto add_n = [&](CLI::App* s) { s->add_option("--n", in.n, "rank n")->required(); };

    auto* mult = sub("mult", "multiplicity of V_mu in H^0(O(lambda)) on the exotic Springer resolution");
    add_n(mult);
    mult->add_option("--mu", in.mu)->required();
    mult->add_option("--lambda", in.lambda)->required();
    mult->add_option("--route", in.route)->check(CLI::IsMember({"a", "b", "both"}));
    mult->callback([&] { action = [&](Session& s) { s.mult(in); }; });

    auto* kost = sub("kostant", "Kostant partition function p or p'");
    add_n(kost);
    kost->add_option("--kind", in.kind)->check(CLI::IsMember({"p", "p'"}));
    kost->add_option("--mu", in.mu)->required();
    kost->callback([&] { action = [&](Session& s) { s.kostant(in); }; });

    auto* subset = sub("subset-identity", "check p'(mu) = sum_S p(mu - e_S)");
    add_n(subset);
    subset->add_option("--mu", in.mu)->required();
    subset->callback([&] { action = [&](Session& s) { s.subset_identity(in); }; });

    auto* bw = sub("bwb", "Borel-Weil-Bott regularisation of lambda");
    add_n(bw);
    bw->add_option("--lambda", in.lambda)->required();
    bw->callback([&] { action = [&](Session& s) { s.bwb_cmd(in); }; });

    auto* wts = sub("weights", "weight multiplicities and dimension of V_mu");
    add_n(wts);
    wts->add_option("--mu", in.mu)->required();
    wts->callback([&] { action = [&](Session& s) { s.weights(in); }; });

    auto* cv = sub("conv", "membership of lambda in conv(mu), or the twisted hull with --twisted");
    add_n(cv);
    cv->add_option("--mu", in.mu)->required();
    cv->add_option("--lambda", in.lambda)->required();
    cv->add_flag("--twisted", in.twisted);
    cv->callback([&] { action = [&](Session& s) { s.conv(in); }; });

    auto* qo = sub("quasi-order", "order dominant weights compatibly with the twisted hull");
    add_n(qo);
    qo->add_option("--weights", in.weights)->required();
    qo->callback([&] { action = [&](Session& s) { s.quasi_order_cmd(in); }; });

    auto* dec = sub("decompose", "all mu with |mu|_1 <= bound occurring in H^0(O(lambda))");
    add_n(dec);
    dec->add_option("--lambda", in.lambda)->required();
    dec->add_option("--bound", in.bound)->required();
    dec->callback([&] { action = [&](Session& s) { s.decompose(in); }; });

    auto* pos = sub("poset", "closure order on bipartitions of n");
    add_n(pos);
    pos->add_flag("--dot", in.dot, "emit Graphviz DOT instead of JSON");
    pos->callback([&] { action = [&](Session& s) { s.poset(in); }; });

    auto add_bip = [&](CLI::App* s) {
        s->add_option("--mu", in.mu);
        s->add_option("--nu", in.nu);
    };
    auto* ph = sub("phic", "the partition Phi^C(mu, nu)");
    add_bip(ph);
    ph->callback([&] { action = [&](Session& s) { s.phic(in); }; });

    auto* col = sub("collapse", "the C-distinguished bipartition (mu, nu)^C");
    add_bip(col);
    col->callback([&] { action = [&](Session& s) { s.collapse_cmd(in); }; });

    auto* fd = sub("filtration-dims", "dim V_{>=a} of the (mu, nu)-filtration");
    add_bip(fd);
    fd->callback([&] { action = [&](Session& s) { s.filtration(in); }; });

    auto* oi = sub("orbit-identify", "bipartition of the orbit through (v, x)");
    oi->add_option("--file", in.file)->required();
    oi->callback([&] { action = [&](Session& s) { s.orbit_identify(in); }; });

    auto* rep = sub("representative", "a point (v, x) of the orbit for (mu, nu)");
    add_bip(rep);
    rep->callback([&] { action = [&](Session& s) { s.representative_cmd(in); }; });

    auto* ad = sub("adapted", "the C-adapted filtration of (v, x)");
    ad->add_option("--file", in.file)->required();
    ad->callback([&] { action = [&](Session& s) { s.adapted(in); }; });

    auto* sw = sub("sweep", "route agreement, support and nonnegativity over a grid");
    add_n(sw);
    sw->add_option("--bound", in.bound)->required();
    sw->callback([&] { checked_action = [&](Session& s) { return s.sweep(in); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        Config cfg;
        if (config_path.empty())
            if (const char* env = std::getenv("EXOTIC_CONFIG"))
                config_path = env;
        if (!config_path.empty())
            cfg.load_file(config_path);
        for (const auto& [k, v] : overrides)
            cfg.set(k, v);
        cfg.validate();
        set_kostant_cache_bytes(cfg.cache_bytes);
        if (simd == "scalar")
            simd::set_isa_override(simd::Isa::scalar);
        else if (simd == "avx2")
            simd::set_isa_override(simd::Isa::avx2);
        else
            simd::set_isa_override(std::nullopt);

        Session session(cfg, out);
        if (checked_action)
            return checked_action(session) ? 0 : 2;
        action(session);
        return 0;
    } catch (const InternalError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace exotic::cli
