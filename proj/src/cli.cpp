#include "ncdomain/cli.hpp"

#include "ncdomain/classify.hpp"
#include "ncdomain/errors.hpp"
#include "ncdomain/fock.hpp"
#include "ncdomain/geometry.hpp"
#include "ncdomain/json_io.hpp"
#include "ncdomain/symbol.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ncd::cli {

namespace {

struct Config {
    std::vector<std::string> symbols;
    int depth = -1;
    double tol = kDefaultMembershipTolerance;
    bool json = false;
    int check_operators = -1;
    std::string dir;
    std::string point;
    std::string tuple_path;
    std::string omega;
    std::string z;
    int circle = 0;
    std::size_t cap = kDefaultDimensionCap;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Symbol load_symbol(const std::string& arg)
{
    if (!arg.empty() && arg.front() == '@')
        return parse_symbol(read_file(arg.substr(1)));
    return parse_symbol(arg);
}

std::string num(double x)
{
    if (x == 0.0)
        x = 0.0; // drop the sign of -0
    std::ostringstream ss;
    ss << std::setprecision(12) << x;
    return ss.str();
}

std::string num(Complex c)
{
    if (c.imag() == 0.0)
        return num(c.real());
    std::ostringstream ss;
    ss << num(c.real()) << (c.imag() < 0 ? "-" : "+") << num(std::abs(c.imag())) << "i";
    return ss.str();
}

std::string list(const ComplexVector& v)
{
    std::string s = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + num(v[i]);
    return s + "]";
}

// Accepts "a", "bi", "a+bi", "a-bi" (also "i", "-i").
Complex parse_complex(std::string s)
{
    std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
    if (s.empty())
        throw std::invalid_argument("empty complex literal");
    auto real_of = [&](const std::string& t) {
        std::size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size())
            throw std::invalid_argument("malformed number '" + t + "'");
        return v;
    };
    if (s.back() != 'i')
        return Complex(real_of(s), 0.0);
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [&](const std::string& t) {
        if (t.empty() || t == "+")
            return 1.0;
        if (t == "-")
            return -1.0;
        return real_of(t);
    };
    if (split == std::string::npos)
        return Complex(0.0, imag_of(body));
    return Complex(real_of(body.substr(0, split)), imag_of(body.substr(split)));
}

ComplexVector parse_vector(const std::string& text)
{
    std::vector<Complex> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        entries.push_back(parse_complex(item));
    if (entries.empty())
        throw std::invalid_argument("empty coordinate list");
    ComplexVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = entries[i];
    return v;
}

int depth_for(const Config& cfg, const Symbol& f) { return cfg.depth >= 0 ? cfg.depth : f.degree() + 3; }

void report_membership(std::ostream& out, const MembershipReport& r)
{
    out << "min_eig = " << num(r.min_eig) << "\n";
    out << (r.member ? "member" : "not a member") << " (tol=" << num(r.tolerance) << ", dim=" << r.dimension
        << ")\n";
}

int cmd_validate(const Config& cfg, std::ostream& out)
{
    const Symbol f = load_symbol(cfg.symbols.at(0));
    if (cfg.json) {
        out << Json{{"valid", true},
                    {"n", f.arity()},
                    {"degree", f.degree()},
                    {"terms", f.size()},
                    {"canonical", format(f)}}
                   .dump()
            << "\n";
    } else {
        out << "valid: n=" << f.arity() << ", degree=" << f.degree() << ", terms=" << f.size() << "\n";
        out << "canonical: " << format(f) << "\n";
    }
    return kSuccess;
}

int cmd_weights(const Config& cfg, std::ostream& out)
{
    const Symbol f = load_symbol(cfg.symbols.at(0));
    const WeightTable t = compute_weights(f, depth_for(cfg, f), cfg.cap);
    if (cfg.json) {
        out << to_json(t).dump() << "\n";
        return kSuccess;
    }
    for (std::size_t i = 0; i < t.index().dimension(); ++i)
        out << t.index().word(i).to_string() << "\t" << to_string(t.at(i)) << "\n";
    return kSuccess;
}

int cmd_shifts(const Config& cfg, std::ostream& out)
{
    const Symbol f = load_symbol(cfg.symbols.at(0));
    const ShiftFamily s = build_shifts(f, depth_for(cfg, f), cfg.cap);
    if (cfg.json) {
        out << to_json(s).dump() << "\n";
        return kSuccess;
    }
    const FockIndex& index = s.index();
    out << "n=" << index.arity() << " N=" << index.depth() << " dim=" << index.dimension() << "\n";
    for (int j = 1; j <= index.arity(); ++j) {
        const ShiftOperator& w = s.shift(j);
        out << "W" << j << ": " << w.nonzeros() << " nonzeros\n";
        for (std::size_t col = 0; col < w.dimension(); ++col) {
            if (w.row(col) == ShiftOperator::kEmpty)
                continue;
            const auto row = static_cast<std::size_t>(w.row(col));
            out << "  " << index.word(col).to_string() << " -> " << index.word(row).to_string() << "\t"
                << num(w.value(col)) << "\n";
        }
    }
    return kSuccess;
}

int cmd_defect(const Config& cfg, std::ostream& out)
{
    const Symbol f = load_symbol(cfg.symbols.at(0));
    const ShiftFamily s = build_shifts(f, depth_for(cfg, f), cfg.cap);
    const MembershipReport r = is_member(f, OperatorTuple::from_shifts(s), cfg.tol);
    if (cfg.json)
        out << to_json(r).dump() << "\n";
    else
        report_membership(out, r);
    return r.member ? kSuccess : kNegative;
}

int cmd_member(const Config& cfg, std::ostream& out)
{
    const Symbol f = load_symbol(cfg.symbols.at(0));
    if (cfg.point.empty() == cfg.tuple_path.empty())
        throw std::invalid_argument("member needs exactly one of --point or --tuple");
    MembershipReport r;
    Json extra = Json::object();
    if (!cfg.point.empty()) {
        const ComplexVector p = parse_vector(cfg.point);
        const double q = q_value(f, p);
        r = is_member(f, OperatorTuple::from_point(p), cfg.tol);
        extra["q"] = q;
        if (!cfg.json)
            out << "q = " << num(q) << "\n";
    } else {
        r = is_member(f, operator_tuple_from_json(Json::parse(read_file(cfg.tuple_path))), cfg.tol);
    }
    if (cfg.json) {
        Json j = to_json(r);
        j.update(extra);
        out << j.dump() << "\n";
    } else {
        report_membership(out, r);
    }
    return r.member ? kSuccess : kNegative;
}

std::string sigma_text(const std::vector<int>& sigma)
{
    std::string s = "[";
    for (std::size_t i = 0; i < sigma.size(); ++i)
        s += (i ? "," : "") + std::to_string(sigma[i]);
    return s + "]";
}

int cmd_classify(const Config& cfg, std::ostream& out)
{
    const Symbol f = load_symbol(cfg.symbols.at(0));
    const Symbol g = load_symbol(cfg.symbols.at(1));
    const ClassificationResult result = classify(f, g);

    std::optional<MembershipReport> check;
    if (result.equivalent() && cfg.check_operators >= 0)
        check = operator_witness_check(f, g, result.witness(), cfg.check_operators, cfg.tol, cfg.cap);

    if (cfg.json) {
        Json j = to_json(result);
        if (check)
            j["operator_check"] = to_json(*check);
        out << j.dump() << "\n";
    } else if (result.equivalent()) {
        const Witness& w = result.witness();
        std::string lambda = "[";
        for (std::size_t i = 0; i < w.lambda().size(); ++i)
            lambda += (i ? "," : "") + to_string(w.lambda()[i]);
        out << "equivalent: sigma=" << sigma_text(w.sigma()) << " lambda=" << lambda << "]\n";
        out << "The domain algebras of f and g are completely isometrically isomorphic.\n";
        if (check) {
            out << "operator check at N=" << cfg.check_operators << ":\n";
            report_membership(out, *check);
        }
    } else {
        out << "inequivalent: ";
        if (const auto* am = std::get_if<ArityMismatch>(&result.verdict)) {
            out << "arity mismatch (n=" << am->n << ", m=" << am->m << ")\n";
        } else {
            const auto& np = std::get<NoPermutation>(result.verdict);
            out << "no permutation; last assignment sigma=" << sigma_text(np.sigma) << " fails at "
                << np.word.to_string() << " (expected " << to_string(np.expected) << ", found "
                << to_string(np.found) << ")\n";
        }
        out << "The domain algebras of f and g are not completely isometrically isomorphic.\n";
    }
    if (!result.equivalent() || (check && !check->member))
        return kNegative;
    return kSuccess;
}

int cmd_boundary(const Config& cfg, std::ostream& out)
{
    const Symbol f = load_symbol(cfg.symbols.at(0));
    const ComplexVector u = parse_vector(cfg.dir);
    const double r = boundary_radius(f, u, cfg.tol);
    if (cfg.json)
        out << Json{{"radius", r}, {"direction", to_json(u)}}.dump() << "\n";
    else
        out << "r = " << num(r) << "\n";
    return kSuccess;
}

int cmd_moebius(const Config& cfg, std::ostream& out)
{
    const BallPoint omega(parse_vector(cfg.omega));
    if (cfg.circle > 0) {
        const auto n = omega.size();
        const CircleFit fit = circle_image(omega, ComplexMatrix::Identity(n, n), cfg.circle);
        if (cfg.json) {
            out << to_json(fit).dump() << "\n";
        } else {
            out << "center = " << list(fit.center) << "\n";
            out << "radius = " << num(fit.radius) << "\n";
            out << "residual = " << num(fit.residual) << "\n";
            out << "distance to origin = " << num(fit.distance(ComplexVector::Zero(n))) << "\n";
        }
        return kSuccess;
    }
    if (cfg.z.empty())
        throw std::invalid_argument("moebius needs --z or --circle");
    const BallPoint image = moebius(omega, BallPoint(parse_vector(cfg.z)));
    if (cfg.json)
        out << Json{{"image", to_json(image.z())}, {"norm2", image.norm2()}}.dump() << "\n";
    else
        out << "phi(z) = " << list(image.z()) << "\n|phi(z)|^2 = " << num(image.norm2()) << "\n";
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Noncommutative domain algebras: weighted shifts, domain membership, and classification"};
    app.name("ncdomain");
    app.require_subcommand(1, 1);

    auto add_symbol = [&](CLI::App* sub, const char* name) {
        sub->add_option(name, cfg.symbols, "Symbol text or @file")->required()->expected(1);
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", cfg.json, "Emit JSON");
        sub->add_option("--cap", cfg.cap, "Fock dimension cap")->check(CLI::PositiveNumber);
    };
    auto add_depth = [&](CLI::App* sub) {
        sub->add_option("--N", cfg.depth, "Truncation level (default: degree + 3)")->check(CLI::NonNegativeNumber);
    };
    auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", cfg.tol, "Tolerance")->check(CLI::PositiveNumber); };

    auto* validate_cmd = app.add_subcommand("validate", "Validate a symbol and print its canonical form");
    add_symbol(validate_cmd, "symbol");
    add_common(validate_cmd);

    auto* weights_cmd = app.add_subcommand("weights", "Exact weight table b_w");
    add_symbol(weights_cmd, "symbol");
    add_common(weights_cmd);
    add_depth(weights_cmd);

    auto* shifts_cmd = app.add_subcommand("shifts", "Truncated weighted shift matrices");
    add_symbol(shifts_cmd, "symbol");
    add_common(shifts_cmd);
    add_depth(shifts_cmd);

    auto* defect_cmd = app.add_subcommand("defect", "Defect of the truncated universal shifts");
    add_symbol(defect_cmd, "symbol");
    add_common(defect_cmd);
    add_depth(defect_cmd);
    add_tol(defect_cmd);

    auto* member_cmd = app.add_subcommand("member", "Domain membership of a point or operator tuple");
    add_symbol(member_cmd, "symbol");
    add_common(member_cmd);
    add_tol(member_cmd);
    member_cmd->add_option("--point", cfg.point, "Comma-separated complex coordinates");
    member_cmd->add_option("--tuple", cfg.tuple_path, "JSON file {\"matrices\": [...]}");

    auto* classify_cmd = app.add_subcommand("classify", "Decide scale-permutation equivalence of two symbols");
    classify_cmd->add_option("f", cfg.symbols, "Symbols f and g (text or @file)")->required()->expected(2);
    add_common(classify_cmd);
    add_tol(classify_cmd);
    classify_cmd->add_option("--check-operators", cfg.check_operators,
                             "Also verify the witness on shifts truncated at this level")
        ->check(CLI::NonNegativeNumber);

    auto* boundary_cmd = app.add_subcommand("boundary", "Boundary radius of the scalar domain along a direction");
    add_symbol(boundary_cmd, "symbol");
    add_common(boundary_cmd);
    boundary_cmd->add_option("--dir", cfg.dir, "Comma-separated complex direction")->required();
    boundary_cmd->add_option("--tol", cfg.tol, "Bisection tolerance on |q - 1|")->check(CLI::PositiveNumber);

    auto* moebius_cmd = app.add_subcommand("moebius", "Ball automorphism exchanging 0 and omega");
    add_common(moebius_cmd);
    moebius_cmd->add_option("--omega", cfg.omega, "Comma-separated complex center")->required();
    moebius_cmd->add_option("--z", cfg.z, "Comma-separated complex point");
    moebius_cmd->add_option("--circle", cfg.circle, "Fit the image of the circle through omega with m samples")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    // Boundary bisection defaults to a tighter tolerance than membership.
    if (boundary_cmd->parsed() && boundary_cmd->count("--tol") == 0)
        cfg.tol = 1e-12;

    try {
        if (validate_cmd->parsed())
            return cmd_validate(cfg, out);
        if (weights_cmd->parsed())
            return cmd_weights(cfg, out);
        if (shifts_cmd->parsed())
            return cmd_shifts(cfg, out);
        if (defect_cmd->parsed())
            return cmd_defect(cfg, out);
        if (member_cmd->parsed())
            return cmd_member(cfg, out);
        if (classify_cmd->parsed())
            return cmd_classify(cfg, out);
        if (boundary_cmd->parsed())
            return cmd_boundary(cfg, out);
        return cmd_moebius(cfg, out);
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const ValidationError& e) {
        err << "invalid symbol: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace ncd::cli
