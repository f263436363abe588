#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>

#include "toepcomm/classify.hpp"
#include "toepcomm/curve.hpp"
#include "toepcomm/errors.hpp"
#include "toepcomm/expr.hpp"
#include "toepcomm/factor.hpp"
#include "toepcomm/fourier.hpp"
#include "toepcomm/numfmt.hpp"
#include "toepcomm/opspace.hpp"
#include "toepcomm/registry.hpp"
#include "toepcomm/serialize.hpp"
#include "toepcomm/svgplot.hpp"
#include "toepcomm/symbol.hpp"

namespace tc = toepcomm;
using tc::Complex;
using tc::json;

namespace {

constexpr const char* kDslGrammar =
    "symbol DSL:\n"
    "  symbol := term ((\"+\"|\"-\") term)* ;\n"
    "  term   := factor (\"*\" factor)* ;\n"
    "  factor := base (\"^\" natural)? ;\n"
    "  base   := \"z\" | complex | \"(\" symbol \")\"\n"
    "          | \"blaschke\" \"[\" complex (\",\" complex)* \"]\"\n"
    "          | \"compose\" \"(\" symbol \",\" symbol \")\" ;\n"
    "  complex literals: a, ai, a+bi, a-bi with decimal reals\n";

struct CommonOpts {
    std::string symbol;
    std::string coeffs_path;
    std::string example;
    int order = tc::kDefaultTruncationOrder;
    int nodes = tc::kDefaultCurveNodes;
    int grid = 16;
    int depth = 6;
    int degree = 0;
    std::string at;
    std::string blaschke;
    std::string format = "text";
    std::string out;
};

void add_symbol_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--symbol", o.symbol, "symbol in the DSL");
    cmd->add_option("--coeffs", o.coeffs_path, "path to a serialized TaylorSymbol (JSON)");
    cmd->add_option("--example", o.example,
                    "named example (identity, halfshift, cardioid, power:n, "
                    "blaschke:re,im;..., zsquare-plus-z4)");
    cmd->add_option("--order", o.order, "truncation order N (cap 512)")->capture_default_str();
    cmd->footer(kDslGrammar);
}

void add_format_options(CLI::App* cmd, CommonOpts& o, const std::string& formats) {
    cmd->add_option("--format", o.format, "output format (" + formats + ")")
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write output to this path instead of stdout");
}

Complex parse_pair(const std::string& text, const char* what) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw tc::PreconditionError(std::string(what) + " expects re,im");
    char* end = nullptr;
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::strtod(re_text.c_str(), &end);
    if (end == nullptr || *end != '\0' || re_text.empty())
        throw tc::PreconditionError(std::string(what) + ": bad real part '" + re_text + "'");
    const double im = std::strtod(im_text.c_str(), &end);
    if (end == nullptr || *end != '\0' || im_text.empty())
        throw tc::PreconditionError(std::string(what) + ": bad imaginary part '" + im_text + "'");
    return Complex(re, im);
}

std::vector<Complex> parse_zero_list(const std::string& text) {
    std::vector<Complex> zeros;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t semi = text.find(';', pos);
        const std::string pair =
            text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        zeros.push_back(parse_pair(pair, "--blaschke"));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return zeros;
}

tc::TaylorSymbol resolve_symbol(const CommonOpts& o) {
    const int given = (!o.symbol.empty()) + (!o.coeffs_path.empty()) + (!o.example.empty());
    if (given != 1)
        throw tc::PreconditionError("provide exactly one of --symbol, --coeffs, --example");
    if (!o.symbol.empty()) return tc::lower_dsl(o.symbol, o.order);
    if (!o.example.empty()) {
        const auto dsl = tc::example_dsl(o.example);
        if (!dsl) throw tc::PreconditionError("unknown example '" + o.example + "'");
        return tc::lower_dsl(*dsl, o.order, o.example);
    }
    std::ifstream in(o.coeffs_path);
    if (!in) throw tc::PreconditionError("cannot read '" + o.coeffs_path + "'");
    json j;
    in >> j;
    return tc::symbol_from_json(j);
}

void check_nodes(int nodes) {
    if (nodes < tc::kMinCurveNodes || nodes > tc::kMaxCurveNodes ||
        !tc::is_power_of_two(static_cast<std::size_t>(nodes)))
        throw tc::PreconditionError("--nodes must be a power of two in [256, 2^20]");
}

void emit(const CommonOpts& o, const std::string& payload) {
    if (o.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw tc::PreconditionError("cannot write '" + o.out + "'");
    out << payload;
}

void require_format(const CommonOpts& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw tc::PreconditionError("unsupported --format '" + o.format + "' for this subcommand");
}

// ---- subcommand bodies ----

void run_classify(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    const tc::TaylorSymbol s = resolve_symbol(o);
    tc::ClassifyConfig cfg;
    cfg.truncation_order = o.order;
    cfg.curve_nodes = o.nodes;
    cfg.grid = o.grid;
    cfg.krylov_depth = o.depth;
    const tc::Verdict v = tc::classify(s, cfg);
    if (o.format == "json")
        emit(o, tc::verdict_to_json(v).dump() + "\n");
    else
        emit(o, tc::explain(v));
}

void run_winding(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    if (o.at.empty()) throw tc::PreconditionError("winding needs --at re,im");
    check_nodes(o.nodes);
    const Complex w = parse_pair(o.at, "--at");
    const int n = tc::winding_number(resolve_symbol(o), w, o.nodes);
    if (o.format == "json")
        emit(o, json{{"winding", n}}.dump() + "\n");
    else
        emit(o, std::to_string(n) + "\n");
}

void run_valence(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    if (o.at.empty()) throw tc::PreconditionError("valence needs --at re,im");
    check_nodes(o.nodes);
    const Complex w = parse_pair(o.at, "--at");
    const int n = tc::valence(resolve_symbol(o), w, o.nodes);
    if (o.format == "json")
        emit(o, json{{"valence", n}}.dump() + "\n");
    else
        emit(o, std::to_string(n) + "\n");
}

void run_profile(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    check_nodes(o.nodes);
    const tc::WindingProfile p = tc::winding_profile(resolve_symbol(o), o.grid, o.nodes);
    if (o.format == "json") {
        emit(o, tc::profile_to_json(p).dump() + "\n");
        return;
    }
    std::string text = "samples: " + std::to_string(p.samples.size()) +
                       ", excluded: " + std::to_string(p.excluded.size()) +
                       ", minimal nonzero winding: " + std::to_string(tc::minimal_winding(p)) + "\n";
    emit(o, text);
}

void run_factor(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    const tc::TaylorSymbol s = resolve_symbol(o);
    const tc::BDUFactorization f = tc::bdu_factor(s);
    if (o.format == "json") {
        emit(o, tc::bdu_to_json(f).dump() + "\n");
        return;
    }
    std::string text = "k = " + std::to_string(f.k) +
                       ", residual = " + tc::fmt_double(f.residual) + "\n";
    if (s.exact_polynomial()) {
        const tc::BDUCrossCheck c = tc::bdu_crosscheck(s, std::max(o.grid, 24));
        text += "crosscheck: k_gcd = " + std::to_string(c.k_gcd) +
                ", k_wind = " + std::to_string(c.k_wind) + ", agree = " +
                (c.agree ? "true" : "false") + "\n";
    }
    emit(o, text);
}

void run_fit(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    if (o.blaschke.empty()) throw tc::PreconditionError("fit needs --blaschke re,im;re,im;...");
    const tc::TaylorSymbol s = resolve_symbol(o);
    const tc::BlaschkeProduct b(parse_zero_list(o.blaschke));
    const int degree = o.degree > 0 ? o.degree : tc::default_fit_degree(s, b);
    const tc::TCFactorization f = tc::fit_through_blaschke(s, b, degree);
    if (o.format == "json") {
        emit(o, tc::tc_to_json(f).dump() + "\n");
        return;
    }
    emit(o, "degree = " + std::to_string(degree) + ", residual = " + tc::fmt_double(f.residual) +
               "\n");
}

void run_commutant(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    const int dim = o.degree > 0 ? o.degree : 8;
    const tc::TaylorSymbol s = resolve_symbol(o);
    const tc::TruncatedOperator t = tc::toeplitz_truncation(s, dim);
    const auto basis = tc::commutant_basis(t);
    const auto bicommutant = tc::double_commutant_basis(basis);
    const int poly_dim = tc::polynomial_algebra_dim(t);
    json report{{"n", dim},
                {"commutant_dim", basis.size()},
                {"double_commutant_dim", bicommutant.size()},
                {"polynomial_algebra_dim", poly_dim}};
    if (o.format == "json") {
        emit(o, report.dump() + "\n");
        return;
    }
    emit(o, "dim commutant = " + std::to_string(basis.size()) +
               ", dim double commutant = " + std::to_string(bicommutant.size()) +
               ", dim polynomial algebra = " + std::to_string(poly_dim) + "\n");
}

void run_density(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    const int dim = o.degree > 0 ? o.degree : 16;
    const tc::TaylorSymbol s = resolve_symbol(o);
    const auto witness = tc::density_witness(s, dim, o.depth);
    if (o.format == "json") {
        emit(o, (witness ? tc::witness_to_json(*witness) : json{{"dense", true}}).dump() + "\n");
        return;
    }
    if (!witness) {
        emit(o, "dense at this truncation\n");
        return;
    }
    emit(o, "witness: max span pairing " + tc::fmt_double(witness->max_pairing) +
               ", separating h = " + witness->separating_h.label() + " with pairing " +
               tc::fmt_double(witness->separating_pairing) + "\n");
}

void run_wold(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    const int parts = o.degree > 0 ? o.degree : 2;
    const tc::TaylorSymbol s = resolve_symbol(o);
    const auto components = tc::wold_components(s, parts);

    const int dim = 12;
    const tc::TaylorSymbol zn = tc::lower_dsl("z^" + std::to_string(parts), std::max(parts, dim));
    const tc::TruncatedOperator t = tc::toeplitz_truncation(zn, dim);
    const tc::TruncatedOperator p = tc::wold_projection_matrix(parts, dim);
    const double proj_comm = (p.matrix * t.matrix - t.matrix * p.matrix).norm();
    const Complex lambda = std::polar(1.0, 2.0 * std::numbers::pi / parts);
    const tc::TruncatedOperator d = tc::dilation_matrix(lambda, dim);
    const double dil_comm = (d.matrix * t.matrix - t.matrix * d.matrix).norm();

    if (o.format == "json") {
        json comps = json::array();
        for (const auto& c : components) comps.push_back(tc::symbol_to_json(c));
        emit(o, json{{"components", std::move(comps)},
                     {"projection_commutator_norm", proj_comm},
                     {"dilation_commutator_norm", dil_comm}}
                        .dump() +
                    "\n");
        return;
    }
    emit(o, std::to_string(parts) + " components; projection commutator " +
               tc::fmt_double(proj_comm) + ", dilation commutator " + tc::fmt_double(dil_comm) +
               "\n");
}

void run_fejer(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    const int n = o.degree > 0 ? o.degree : 16;
    const tc::TaylorSymbol h = resolve_symbol(o);
    const tc::TaylorSymbol sigma = tc::fejer_polynomial(h, n);
    const tc::SupNormCheck check = tc::fejer_supnorm_check(h, n);
    std::optional<double> gap;
    if (!o.at.empty()) {
        const std::vector<Complex> onec{Complex(1.0)};
        gap = tc::fejer_wot_gap(h, n, parse_pair(o.at, "--at"), tc::TaylorSymbol(onec));
    }
    if (o.format == "json") {
        json out{{"sigma", tc::symbol_to_json(sigma)},
                 {"sigma_sup", check.sigma_norm},
                 {"h_sup", check.h_norm},
                 {"bound_ok", check.ok}};
        if (gap) out["gap"] = *gap;
        emit(o, out.dump() + "\n");
        return;
    }
    std::string text = "||sigma|| = " + tc::fmt_double(check.sigma_norm) +
                       ", ||h|| = " + tc::fmt_double(check.h_norm) +
                       ", bound ok = " + (check.ok ? "true" : "false") + "\n";
    if (gap) text += "gap = " + tc::fmt_double(*gap) + "\n";
    emit(o, text);
}

void run_malmquist(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    if (o.blaschke.empty())
        throw tc::PreconditionError("malmquist needs --blaschke re,im;re,im;...");
    const tc::BlaschkeProduct b(parse_zero_list(o.blaschke));
    const auto basis = tc::malmquist_basis(b, o.order);

    double gram_residual = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Complex g = basis[j].adjoint() * basis[i];
            gram_residual = std::max(gram_residual, std::abs(g - (i == j ? 1.0 : 0.0)));
        }

    if (o.format == "json") {
        json vecs = json::array();
        for (const auto& v : basis) {
            json vec = json::array();
            for (int k = 0; k < v.size(); ++k) vec.push_back(tc::complex_to_json(v(k)));
            vecs.push_back(std::move(vec));
        }
        emit(o, json{{"vectors", std::move(vecs)}, {"gram_residual", gram_residual}}.dump() + "\n");
        return;
    }
    emit(o, std::to_string(basis.size()) + " vectors, gram residual " +
               tc::fmt_double(gram_residual) + "\n");
}

void run_plot(const CommonOpts& o) {
    require_format(o, {"svg"});
    check_nodes(o.nodes);
    tc::PlotConfig cfg;
    cfg.curve_nodes = o.nodes;
    emit(o, tc::winding_plot_svg(resolve_symbol(o), cfg));
}

void run_examples(const CommonOpts& o) {
    require_format(o, {"json", "text"});
    if (o.format == "json") {
        json out = json::array();
        for (const auto& e : tc::example_registry())
            out.push_back(json{{"name", e.name}, {"dsl", e.dsl}, {"note", e.note}});
        emit(o, out.dump() + "\n");
        return;
    }
    std::string text;
    for (const auto& e : tc::example_registry())
        text += e.name + "\t" + e.dsl + "\t" + e.note + "\n";
    emit(o, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytic Toeplitz symbol laboratory: winding geometry, "
                 "factorizations, truncated commutants, and MCP/DCP classification"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd;
        CommonOpts opts;
        void (*run)(const CommonOpts&);
    };
    std::vector<std::unique_ptr<Sub>> subs;

    const auto make = [&](const char* name, const char* desc, void (*fn)(const CommonOpts&)) {
        auto sub = std::make_unique<Sub>();
        sub->cmd = app.add_subcommand(name, desc);
        sub->run = fn;
        subs.push_back(std::move(sub));
        return subs.back().get();
    };

    {
        Sub* s = make("classify", "MCP/DCP verdict with rule-by-rule evidence", run_classify);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--nodes", s->opts.nodes, "curve nodes (power of two)")
            ->capture_default_str();
        s->cmd->add_option("--grid", s->opts.grid, "polar grid size")->capture_default_str();
        s->cmd->add_option("--depth", s->opts.depth, "density-witness Krylov depth")
            ->capture_default_str();
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("winding", "winding number of the image curve about a point", run_winding);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--nodes", s->opts.nodes, "curve nodes (power of two)")
            ->capture_default_str();
        s->cmd->add_option("--at", s->opts.at, "target point re,im")->required();
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("valence", "preimage count with the root-count cross-check", run_valence);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--nodes", s->opts.nodes, "curve nodes (power of two)")
            ->capture_default_str();
        s->cmd->add_option("--at", s->opts.at, "target point re,im")->required();
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("profile", "winding profile over a polar grid", run_profile);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--nodes", s->opts.nodes, "curve nodes (power of two)")
            ->capture_default_str();
        s->cmd->add_option("--grid", s->opts.grid, "polar grid size")->capture_default_str();
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("factor", "Baker-Deddens-Ullman factorization phi = h(z^k)", run_factor);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--grid", s->opts.grid, "crosscheck grid size")->capture_default_str();
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("fit", "least-squares fit of phi through a Blaschke product", run_fit);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--blaschke", s->opts.blaschke, "zeros re,im;re,im;...")->required();
        s->cmd->add_option("--degree", s->opts.degree, "fit degree (default from deg/order)");
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("commutant", "commutant and double-commutant dimensions", run_commutant);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--degree", s->opts.degree, "compression dimension (default 8, cap 24)");
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("density", "density witness for the polynomials on phi", run_density);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--degree", s->opts.degree, "witness space dimension (default 16)");
        s->cmd->add_option("--depth", s->opts.depth, "Krylov depth m")->capture_default_str();
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("wold", "Wold components and exact commutation checks", run_wold);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--degree", s->opts.degree, "component count n (default 2)");
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("fejer", "Fejer mean, sup-norm bound, pointwise gap", run_fejer);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--degree", s->opts.degree, "Fejer order n (default 16)");
        s->cmd->add_option("--at", s->opts.at, "gap evaluation point re,im");
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("malmquist", "Takenaka-Malmquist model-space basis", run_malmquist);
        s->cmd->add_option("--blaschke", s->opts.blaschke, "zeros re,im;re,im;...")->required();
        s->cmd->add_option("--order", s->opts.order, "coefficient truncation")
            ->capture_default_str();
        add_format_options(s->cmd, s->opts, "json, text");
    }
    {
        Sub* s = make("plot", "SVG winding plot of the image curve", run_plot);
        add_symbol_options(s->cmd, s->opts);
        s->cmd->add_option("--nodes", s->opts.nodes, "curve nodes (power of two)")
            ->capture_default_str();
        s->opts.format = "svg";
        add_format_options(s->cmd, s->opts, "svg");
    }
    {
        Sub* s = make("examples", "list the named-example registry", run_examples);
        add_format_options(s->cmd, s->opts, "json, text");
    }

    try {
        app.parse(argc, argv);
        for (const auto& sub : subs)
            if (sub->cmd->parsed()) sub->run(sub->opts);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n" << kDslGrammar;
        return 2;
    } catch (const tc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (tc::is_input_error(e)) {
            if (dynamic_cast<const tc::SyntaxError*>(&e) != nullptr) std::cerr << kDslGrammar;
            return 2;
        }
        return 3;
    }
}
