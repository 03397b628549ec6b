#include "normeq/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "normeq/bounds.hpp"
#include "normeq/equality_classes.hpp"
#include "normeq/generators.hpp"
#include "normeq/induced_norms.hpp"
#include "normeq/matrix_io.hpp"

namespace normeq {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep = ',')
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    return parts;
}

std::vector<ExtIndex> parse_grid(const std::string& text)
{
    std::vector<ExtIndex> grid;
    for (const auto& t : split(text))
        grid.push_back(ExtIndex::parse(t));
    if (grid.empty())
        throw PreconditionError("empty index grid");
    return grid;
}

std::vector<double> parse_doubles(const std::string& text)
{
    std::vector<double> out;
    for (const auto& t : split(text)) {
        std::size_t used = 0;
        const double x = std::stod(t, &used);
        if (used != t.size())
            throw PreconditionError("not a number: " + t);
        out.push_back(x);
    }
    return out;
}

json vector_json(const Vector& v, Field field)
{
    json arr = json::array();
    for (const auto& z : v) {
        if (field == Field::real)
            arr.push_back(z.real());
        else
            arr.push_back(json::array({z.real(), z.imag()}));
    }
    return arr;
}

json matrix_json(const Matrix& a)
{
    return json::parse(matrix_to_json(a));
}

std::string vector_text(const Vector& v, Field field)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        if (field == Field::real)
            out += format_double(v[i].real());
        else
            out += "(" + format_double(v[i].real()) + ", " + format_double(v[i].imag()) + ")";
    }
    return out + "]";
}

int membership_exit(Membership m)
{
    switch (m) {
    case Membership::yes: return exit_ok;
    case Membership::no: return exit_no;
    case Membership::undetermined: return exit_undetermined;
    }
    return exit_undetermined;
}

json verdict_json(const ClassVerdict& v, ExtIndex p, ExtIndex q, Field field)
{
    json j;
    j["class"] = to_string(v.id);
    j["p"] = p.str();
    j["q"] = q.str();
    j["member"] = to_string(v.member);
    j["certainty"] = to_string(v.certainty);
    json conds = json::array();
    for (const auto& c : v.conditions) {
        json measured = json::object();
        for (const auto& [k, x] : c.measured)
            measured[k] = x;
        conds.push_back({{"name", c.name}, {"satisfied", c.satisfied}, {"measured", measured}});
    }
    j["conditions"] = conds;
    json cert = json::object();
    if (v.certificate.maximizer)
        cert["maximizer"] = vector_json(*v.certificate.maximizer, field);
    if (v.certificate.eigenvector)
        cert["eigenvector"] = vector_json(*v.certificate.eigenvector, field);
    if (v.certificate.D)
        cert["D"] = matrix_json(*v.certificate.D);
    if (v.certificate.V)
        cert["V"] = matrix_json(*v.certificate.V);
    if (v.certificate.svd) {
        cert["svd"] = {{"U", matrix_json(v.certificate.svd->U)},
                       {"singular", v.certificate.svd->singular},
                       {"V", matrix_json(v.certificate.svd->V)}};
    }
    j["certificate"] = cert;
    if (!v.note.empty())
        j["note"] = v.note;
    return j;
}

void print_verdict(std::ostream& os, const ClassVerdict& v, ExtIndex p, ExtIndex q, Field field)
{
    os << to_string(v.id) << " at (p,q) = (" << p.str() << ", " << q.str() << "): " << to_string(v.member) << " ["
       << to_string(v.certainty) << "]\n";
    for (const auto& c : v.conditions) {
        os << "  [" << (c.satisfied ? "x" : " ") << "] " << c.name;
        for (const auto& [k, x] : c.measured)
            os << "; " << k << " = " << format_double(x);
        os << '\n';
    }
    if (v.certificate.eigenvector)
        os << "  eigenvector: " << vector_text(*v.certificate.eigenvector, field) << '\n';
    else if (v.certificate.maximizer)
        os << "  maximizer: " << vector_text(*v.certificate.maximizer, field) << '\n';
    if (v.certificate.svd)
        os << "  top singular value: " << format_double(v.certificate.svd->singular.front()) << '\n';
    if (!v.note.empty())
        os << "  note: " << v.note << '\n';
}

unsigned worker_count(std::size_t jobs)
{
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("THREADS")) {
        const int t = std::atoi(env);
        if (t > 0)
            threads = static_cast<unsigned>(t);
    }
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

// Runs f(i) for i in [0, count) on a small pool; results are indexed so
// output order does not depend on scheduling.
template <class F>
void parallel_for(std::size_t count, F f)
{
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = worker_count(count);
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

Certainty weaker(Certainty a, Certainty b)
{
    if (!is_exact(a))
        return a;
    if (!is_exact(b))
        return b;
    return a;
}

struct NormArgs {
    std::string file;
    std::string p = "2";
    std::string q = "2";
    bool exact_only = false;
    bool as_json = false;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
};

int cmd_norm(const NormArgs& args, std::ostream& out, std::ostream& err)
{
    const Matrix a = read_matrix_file(args.file);
    const ExtIndex p = ExtIndex::parse(args.p);
    const ExtIndex q = ExtIndex::parse(args.q);
    CheckOptions opts;
    opts.estimator.seed = args.seed;
    opts.oracle_budget = args.budget;
    const NormResult r = evaluate_norm(a, p, q, opts);
    if (args.exact_only && !is_exact(r.certainty)) {
        err << "error: no exact path for (p,q) = (" << p.str() << ", " << q.str() << "); estimate "
            << format_double(r.value) << '\n';
        return exit_not_exact;
    }
    if (args.as_json) {
        json j{{"p", p.str()},
               {"q", q.str()},
               {"value", r.value},
               {"certainty", to_string(r.certainty)},
               {"witness", vector_json(r.witness, a.field())},
               {"seed", args.seed}};
        out << j.dump(2) << '\n';
    } else {
        out << format_double(r.value) << ' ' << to_string(r.certainty) << '\n';
        out << "witness " << vector_text(r.witness, a.field()) << '\n';
        if (!is_exact(r.certainty))
            out << "seed " << args.seed << '\n';
    }
    return exit_ok;
}

struct CheckArgs {
    std::string file;
    std::string p = "2";
    std::string q = "2";
    std::string class_id;
    std::string rs;
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    bool as_json = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err)
{
    const Matrix a = read_matrix_file(args.file);
    const ExtIndex p = ExtIndex::parse(args.p);
    const ExtIndex q = ExtIndex::parse(args.q);
    CheckOptions opts;
    opts.tol_exact = args.tol;
    opts.estimator.seed = args.seed;
    if (args.class_id.empty() == args.rs.empty()) {
        err << "error: give exactly one of --class or --rs\n";
        return exit_invalid;
    }

    std::optional<ClassVerdict> verdict;
    if (!args.class_id.empty()) {
        const auto id = parse_class_id(args.class_id);
        if (!id) {
            err << "error: unknown class " << args.class_id << '\n';
            return exit_invalid;
        }
        verdict = check_class(a, *id, p, q, opts);
    } else {
        const auto grid = parse_grid(args.rs);
        if (grid.size() != 2) {
            err << "error: --rs expects r,s\n";
            return exit_invalid;
        }
        const ExtIndex r = grid[0];
        const ExtIndex s = grid[1];
        const auto id = class_for_quadrant(p, q, r, s);
        if (id && p.is_two() && q.is_two()) {
            verdict = check_theorem2(a, r, s, opts);
        } else if (id) {
            verdict = check_class(a, *id, p, q, opts);
        } else {
            const BoundReport rep = check_inequality(a, p, q, r, s, opts);
            const bool eq = rep.equality;
            if (args.as_json) {
                json j{{"p", p.str()},         {"q", q.str()},           {"r", r.str()},
                       {"s", s.str()},         {"norm_rs", rep.lhs},     {"factor", rep.factor},
                       {"bound", rep.bound()}, {"slack", rep.slack},     {"equality", eq},
                       {"certainty", to_string(weaker(rep.lhs_certainty, rep.rhs_certainty))}};
                out << j.dump(2) << '\n';
            } else {
                out << "(r,s) = (" << r.str() << ", " << s.str() << ") lies on a quadrant boundary\n";
                out << "  ||A||_{r,s} = " << format_double(rep.lhs) << ", bound = " << format_double(rep.bound())
                    << ", slack = " << format_double(rep.slack) << '\n';
                out << "  equality: " << (eq ? "yes" : "no") << '\n';
            }
            return eq ? exit_ok : exit_no;
        }
    }

    if (args.as_json)
        out << verdict_json(*verdict, p, q, a.field()).dump(2) << '\n';
    else
        print_verdict(out, *verdict, p, q, a.field());
    return membership_exit(verdict->member);
}

struct SweepArgs {
    std::string file;
    std::string p = "2";
    std::string q = "2";
    std::string r_grid;
    std::string s_grid;
    std::string output;
    std::uint64_t seed = 0;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err)
{
    const Matrix a = read_matrix_file(args.file);
    const ExtIndex p = ExtIndex::parse(args.p);
    const ExtIndex q = ExtIndex::parse(args.q);
    const auto rs = parse_grid(args.r_grid);
    const auto ss = parse_grid(args.s_grid);
    CheckOptions opts;
    opts.estimator.seed = args.seed;

    std::ofstream file;
    if (!args.output.empty() && args.output != "-") {
        file.open(args.output);
        if (!file) {
            err << "error: cannot write " << args.output << '\n';
            return exit_invalid;
        }
    }
    std::ostream& sink = file.is_open() ? static_cast<std::ostream&>(file) : out;

    const NormResult pq = evaluate_norm(a, p, q, opts);
    std::vector<std::string> lines(rs.size() * ss.size());
    parallel_for(lines.size(), [&](std::size_t k) {
        const ExtIndex r = rs[k / ss.size()];
        const ExtIndex s = ss[k % ss.size()];
        const NormResult nrs = evaluate_norm(a, r, s, opts);
        const double factor = bound_factor(p, q, r, s, a.cols(), a.rows());
        const double bound = factor * pq.value;
        const double ratio = bound > 0.0 ? nrs.value / bound : (nrs.value == 0.0 ? 1.0 : INFINITY);
        lines[k] = r.str() + ',' + s.str() + ',' + format_double(nrs.value) + ',' + format_double(factor) + ','
                 + format_double(bound) + ',' + format_double(ratio) + ','
                 + std::string(to_string(weaker(nrs.certainty, pq.certainty)));
    });
    sink << "r,s,norm_rs,factor,bound,ratio,certainty\n";
    for (const auto& l : lines)
        sink << l << '\n';
    sink.flush();
    if (!sink) {
        err << "error: write failed\n";
        return exit_invalid;
    }
    return exit_ok;
}

struct GenerateArgs {
    std::string kind;
    std::string class_id;
    std::string rs;
    std::size_t m = 2;
    std::size_t n = 0;
    std::string sigma;
    std::uint64_t seed = 0;
    std::string field = "real";
    std::string c;
    std::string b;
    std::size_t i = 0;
    std::size_t j = 0;
    double rho = 1.0;
    std::string p = "2";
    std::string q = "2";
    std::string output;
};

Vector parse_json_vector(const std::string& text, Field& field)
{
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error&) {
        throw PreconditionError("vector must be a JSON array: " + text);
    }
    if (!arr.is_array() || arr.empty())
        throw PreconditionError("vector must be a nonempty JSON array");
    Vector v;
    for (const auto& e : arr) {
        if (e.is_number()) {
            v.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            v.emplace_back(e[0].get<double>(), e[1].get<double>());
            field = Field::complex;
        } else {
            throw PreconditionError("vector entries must be numbers or [re, im] pairs");
        }
    }
    return v;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err)
{
    Field field;
    if (args.field == "real")
        field = Field::real;
    else if (args.field == "complex")
        field = Field::complex;
    else {
        err << "error: --field must be real or complex\n";
        return exit_invalid;
    }
    const ExtIndex p = ExtIndex::parse(args.p);
    const ExtIndex q = ExtIndex::parse(args.q);
    const std::size_t m = args.m;
    const std::size_t n = args.n == 0 ? args.m : args.n;

    Matrix a;
    std::optional<ClassVerdict> verdict;
    ExtIndex vp = p;
    ExtIndex vq = q;
    if (args.kind == "hadamard") {
        a = gen_hadamard(m);
        vp = vq = ExtIndex::two();
        verdict = check_E11(a, vp, vq);
    } else if (args.kind == "dft") {
        a = gen_dft(m);
        vp = vq = ExtIndex::two();
        verdict = check_E11(a, vp, vq);
    } else if (args.kind == "single") {
        a = gen_single_entry(m, n, args.i, args.j, args.rho);
        verdict = check_E1inf(a, p, q);
    } else if (args.kind == "tensor") {
        Field f = field;
        const Vector c = parse_json_vector(args.c.empty() ? "[1]" : args.c, f);
        const Vector b = parse_json_vector(args.b.empty() ? "[1]" : args.b, f);
        a = gen_tensor_product(c, b, f);
        if (k_class_test(c, KClass::K1) && k_class_test(b, KClass::K1) && !p.is_infinite() && !q.is_one())
            verdict = check_Einf1(a, p, q);
        else {
            const NormResult r = induced_norm(a, p, q);
            const double law = vector_norm(b, conjugate(p)) * vector_norm(c, q);
            err << "tensor norm law at (" << p.str() << ", " << q.str() << "): ||A|| = " << format_double(r.value)
                << ", ||b||_{p*} ||c||_q = " << format_double(law) << '\n';
        }
    } else if (args.kind == "svd") {
        std::pair<ExtIndex, ExtIndex> target;
        if (!args.class_id.empty()) {
            const auto id = parse_class_id(args.class_id);
            if (!id) {
                err << "error: unknown class " << args.class_id << '\n';
                return exit_invalid;
            }
            target = extremal_pair(*id);
        } else if (!args.rs.empty()) {
            const auto grid = parse_grid(args.rs);
            if (grid.size() != 2) {
                err << "error: --rs expects r,s\n";
                return exit_invalid;
            }
            target = {grid[0], grid[1]};
        } else {
            err << "error: --kind svd needs --class or --rs\n";
            return exit_invalid;
        }
        std::vector<double> sigma = args.sigma.empty() ? std::vector<double>{1.0} : parse_doubles(args.sigma);
        a = gen_theorem2(m, n, target.first, target.second, sigma, args.seed, field);
        vp = vq = ExtIndex::two();
        verdict = check_theorem2(a, target.first, target.second);
        verdict->id = class_for_quadrant(vp, vq, target.first, target.second).value_or(verdict->id);
    } else {
        err << "error: --kind must be one of hadamard, dft, tensor, single, svd\n";
        return exit_invalid;
    }

    if (!args.output.empty() && args.output != "-")
        write_matrix_file(a, args.output);
    else
        out << matrix_to_json(a);
    if (!verdict)
        return exit_ok;
    print_verdict(err, *verdict, vp, vq, a.field());
    return membership_exit(verdict->member);
}

struct VerifyArgs {
    std::string file;
    double tol = 1e-9;
    double tol_estimated = 1e-3;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::vector<std::string> assert_norm;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream&)
{
    const Matrix a = read_matrix_file(args.file);
    CheckOptions opts;
    opts.tol_exact = args.tol;
    opts.tol_estimated = args.tol_estimated;
    opts.estimator.seed = args.seed;
    opts.oracle_budget = args.budget;

    std::vector<ExtIndex> grid{ExtIndex::one(), ExtIndex::two(), ExtIndex::infinity()};
    if (std::max(a.rows(), a.cols()) <= 4)
        grid = {ExtIndex::one(), ExtIndex(1.5), ExtIndex::two(), ExtIndex(3.0), ExtIndex::infinity()};
    const std::size_t g = grid.size();

    std::vector<NormResult> norms(g * g);
    std::vector<NormResult> adjoint(g * g);
    parallel_for(g * g, [&](std::size_t k) {
        const ExtIndex p = grid[k / g];
        const ExtIndex q = grid[k % g];
        norms[k] = evaluate_norm(a, p, q, opts);
        adjoint[k] = evaluate_norm(a.adjoint(), conjugate(q), conjugate(p), opts);
    });

    for (const auto& spec : args.assert_norm) {
        const auto parts = split(spec);
        if (parts.size() != 3)
            throw PreconditionError("--assert-norm expects p,q,value");
        const ExtIndex p = ExtIndex::parse(parts[0]);
        const ExtIndex q = ExtIndex::parse(parts[1]);
        const double value = parse_doubles(parts[2]).front();
        const auto ip = std::find(grid.begin(), grid.end(), p);
        const auto iq = std::find(grid.begin(), grid.end(), q);
        if (ip == grid.end() || iq == grid.end())
            throw PreconditionError("--assert-norm index not on the verification grid");
        NormResult& slot = norms[static_cast<std::size_t>(ip - grid.begin()) * g + static_cast<std::size_t>(iq - grid.begin())];
        slot.value = value;
        slot.certainty = Certainty::exact_closed_form;
    }
    auto at = [&](std::size_t ip, std::size_t iq) -> const NormResult& { return norms[ip * g + iq]; };

    bool all = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        all = all && ok;
        out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    };

    // inequality grid: worst slack relative to the bound
    {
        double worst = INFINITY;
        std::string where;
        bool ok = true;
        for (std::size_t ip = 0; ip < g; ++ip)
            for (std::size_t iq = 0; iq < g; ++iq)
                for (std::size_t ir = 0; ir < g; ++ir)
                    for (std::size_t is = 0; is < g; ++is) {
                        const BoundReport rep = make_bound_report(
                            at(ir, is), at(ip, iq), bound_factor(grid[ip], grid[iq], grid[ir], grid[is], a.cols(), a.rows()),
                            opts);
                        const double rel = rep.bound() > 0.0 ? rep.slack / rep.bound() : 0.0;
                        if (rel < -rep.tol)
                            ok = false;
                        if (rel < worst) {
                            worst = rel;
                            where = "(p,q,r,s) = (" + grid[ip].str() + "," + grid[iq].str() + "," + grid[ir].str() + ","
                                  + grid[is].str() + ")";
                        }
                    }
        report("inequality grid", ok, "min relative slack " + format_double(worst) + " at " + where);
    }

    // duality
    {
        bool ok = true;
        double worst = 0.0;
        for (std::size_t k = 0; k < g * g; ++k) {
            const bool exact = is_exact(norms[k].certainty) && is_exact(adjoint[k].certainty);
            const double scale = std::max({norms[k].value, adjoint[k].value, 1e-300});
            const double rel = std::abs(norms[k].value - adjoint[k].value) / scale;
            worst = std::max(worst, rel);
            if (rel > (exact ? opts.tol_exact : opts.tol_estimated))
                ok = false;
        }
        report("duality", ok, "max relative difference " + format_double(worst));
    }

    // monotonicity: ‖A‖_{r,s} nondecreasing and m^{1/r}‖A‖_{r,s} nonincreasing in r;
    // n^{-1/s}‖A‖_{r,s} nondecreasing and ‖A‖_{r,s} nonincreasing in s
    {
        bool ok = true;
        double worst = 0.0;
        const double m = static_cast<double>(a.cols());
        const double n = static_cast<double>(a.rows());
        auto step = [&](const NormResult& lo, const NormResult& hi, double up_lo, double up_hi, double dn_lo,
                        double dn_hi) {
            const bool exact = is_exact(lo.certainty) && is_exact(hi.certainty);
            const double tol = exact ? opts.tol_exact : opts.tol_estimated;
            const double f0 = up_lo * lo.value;
            const double f1 = up_hi * hi.value;
            const double g0 = dn_lo * lo.value;
            const double g1 = dn_hi * hi.value;
            const double v = std::max(f0 > 0.0 ? (f0 - f1) / f0 : 0.0, g0 > 0.0 ? (g1 - g0) / g0 : 0.0);
            worst = std::max(worst, v);
            if (v > tol)
                ok = false;
        };
        for (std::size_t fixed = 0; fixed < g; ++fixed)
            for (std::size_t i = 0; i + 1 < g; ++i) {
                step(at(i, fixed), at(i + 1, fixed), 1.0, 1.0, std::pow(m, grid[i].reciprocal()),
                     std::pow(m, grid[i + 1].reciprocal()));
                step(at(fixed, i), at(fixed, i + 1), std::pow(n, -grid[i].reciprocal()),
                     std::pow(n, -grid[i + 1].reciprocal()), 1.0, 1.0);
            }
        report("monotonicity", ok, "max relative violation " + format_double(worst));
    }

    // eigenvector property of exact maximizers with flat support
    {
        bool ok = true;
        std::size_t tested = 0;
        for (std::size_t ip = 0; ip < g; ++ip)
            for (std::size_t iq = 0; iq < g; ++iq) {
                const NormResult& r = at(ip, iq);
                if (!is_exact(r.certainty) || r.witness.empty())
                    continue;
                try {
                    if (!lemma31_eigencheck(a, r.witness, grid[ip], grid[iq], 1e-8))
                        ok = false;
                    ++tested;
                } catch (const PreconditionError&) {
                }
            }
        report("maximizer eigenvector", ok, std::to_string(tested) + " applicable maximizers");
    }
    return all ? exit_ok : exit_verify_failed;
}

std::vector<std::string> args_of(int argc, const char* const* argv)
{
    std::vector<std::string> v;
    for (int i = 0; i < argc; ++i)
        v.emplace_back(argv[i]);
    return v;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Induced matrix norm bounds and equality classes"};
    app.require_subcommand(1);

    NormArgs norm_args;
    auto* norm = app.add_subcommand("norm", "Compute ||A||_{p,q}");
    norm->add_option("file", norm_args.file, "Matrix JSON file")->required();
    norm->add_option("p", norm_args.p, "Domain index (1..inf)")->required();
    norm->add_option("q", norm_args.q, "Range index (1..inf)")->required();
    norm->add_flag("--exact-only", norm_args.exact_only, "Fail with exit 2 if only an estimate exists");
    norm->add_option("--seed", norm_args.seed, "Estimator seed");
    norm->add_option("--budget", norm_args.budget, "Extra brute-force samples for estimated norms");
    norm->add_flag("--json", norm_args.as_json, "JSON output");

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Decide membership in an equality class");
    check->add_option("file", check_args.file, "Matrix JSON file")->required();
    check->add_option("p", check_args.p)->required();
    check->add_option("q", check_args.q)->required();
    check->add_option("--class", check_args.class_id, "E_1inf, E_11, E_infinf or E_inf1");
    check->add_option("--rs", check_args.rs, "Index pair r,s");
    check->add_option("--tol", check_args.tol, "Relative tolerance");
    check->add_option("--seed", check_args.seed);
    check->add_flag("--json", check_args.as_json, "JSON output");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Tabulate ||A||_{r,s} against the bound over an (r,s) grid");
    sweep->add_option("file", sweep_args.file, "Matrix JSON file")->required();
    sweep->add_option("p", sweep_args.p)->required();
    sweep->add_option("q", sweep_args.q)->required();
    sweep->add_option("--r-grid", sweep_args.r_grid, "Comma-separated r values")->required();
    sweep->add_option("--s-grid", sweep_args.s_grid, "Comma-separated s values")->required();
    sweep->add_option("-o,--out", sweep_args.output, "CSV path (default stdout)");
    sweep->add_option("--seed", sweep_args.seed);

    GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "Emit a matrix attaining equality");
    gen->add_option("--kind", gen_args.kind, "hadamard, dft, tensor, single or svd")->required();
    gen->add_option("--class", gen_args.class_id, "Target class for --kind svd");
    gen->add_option("--rs", gen_args.rs, "Target r,s for --kind svd");
    gen->add_option("--m", gen_args.m, "Columns (order for hadamard/dft)");
    gen->add_option("--n", gen_args.n, "Rows (default m)");
    gen->add_option("--sigma", gen_args.sigma, "Comma-separated singular values, largest first");
    gen->add_option("--seed", gen_args.seed);
    gen->add_option("--field", gen_args.field, "real or complex");
    gen->add_option("--c", gen_args.c, "Tensor row factor as JSON array");
    gen->add_option("--b", gen_args.b, "Tensor column factor as JSON array");
    gen->add_option("--i", gen_args.i, "Row index for single (0-based)");
    gen->add_option("--j", gen_args.j, "Column index for single (0-based)");
    gen->add_option("--rho", gen_args.rho, "Entry value for single");
    gen->add_option("--p", gen_args.p, "p for the confirmation check");
    gen->add_option("--q", gen_args.q, "q for the confirmation check");
    gen->add_option("-o,--out", gen_args.output, "Output path (default stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the invariant battery");
    verify->add_option("file", verify_args.file, "Matrix JSON file")->required();
    verify->add_option("--tol", verify_args.tol, "Tolerance on exact paths");
    verify->add_option("--tol-estimated", verify_args.tol_estimated, "Tolerance on estimated paths");
    verify->add_option("--seed", verify_args.seed);
    verify->add_option("--budget", verify_args.budget, "Extra brute-force samples for estimated norms");
    verify->add_option("--assert-norm", verify_args.assert_norm, "Override a norm value: p,q,value");

    try {
        std::vector<std::string> args = args_of(argc, argv);
        std::vector<const char*> ptrs;
        for (const auto& s : args)
            ptrs.push_back(s.c_str());
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }

    try {
        if (*norm)
            return cmd_norm(norm_args, out, err);
        if (*check)
            return cmd_check(check_args, out, err);
        if (*sweep)
            return cmd_sweep(sweep_args, out, err);
        if (*gen)
            return cmd_generate(gen_args, out, err);
        if (*verify)
            return cmd_verify(verify_args, out, err);
    } catch (const DimensionTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return exit_not_exact;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}

} // namespace normeq
