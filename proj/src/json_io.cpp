#include "ncdomain/json_io.hpp"

#include "ncdomain/errors.hpp"

namespace ncd {

Json rational_to_json(const Rational& r)
{
    return Json{{"num", numerator_string(r)}, {"den", denominator_string(r)}};
}

Rational rational_from_json(const Json& j)
{
    return rational_from_strings(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

Json word_to_json(const Word& w) { return Json(std::vector<int>(w.begin(), w.end())); }

Word word_from_json(const Json& j) { return Word(j.get<std::vector<int>>()); }

Json to_json(const Witness& w)
{
    Json lambda = Json::array();
    for (const auto& l : w.lambda())
        lambda.push_back(rational_to_json(l));
    return Json{{"sigma", w.sigma()}, {"lambda", std::move(lambda)}};
}

Witness witness_from_json(const Json& j)
{
    std::vector<Rational> lambda;
    for (const auto& l : j.at("lambda"))
        lambda.push_back(rational_from_json(l));
    return Witness(j.at("sigma").get<std::vector<int>>(), std::move(lambda));
}

Json to_json(const ClassificationResult& r)
{
    if (const auto* eq = std::get_if<Equivalent>(&r.verdict))
        return Json{{"verdict", "equivalent"}, {"witness", to_json(eq->witness)}};
    if (const auto* am = std::get_if<ArityMismatch>(&r.verdict))
        return Json{{"verdict", "inequivalent"},
                    {"certificate", {{"kind", "arity_mismatch"}, {"n", am->n}, {"m", am->m}}}};
    const auto& np = std::get<NoPermutation>(r.verdict);
    return Json{{"verdict", "inequivalent"},
                {"certificate",
                 {{"kind", "no_permutation"},
                  {"sigma", np.sigma},
                  {"word", word_to_json(np.word)},
                  {"expected", rational_to_json(np.expected)},
                  {"found", rational_to_json(np.found)}}}};
}

ClassificationResult classification_from_json(const Json& j)
{
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "equivalent")
        return {Equivalent{witness_from_json(j.at("witness"))}};
    if (verdict != "inequivalent")
        throw Error("unknown classification verdict '" + verdict + "'");
    const Json& cert = j.at("certificate");
    const auto kind = cert.at("kind").get<std::string>();
    if (kind == "arity_mismatch")
        return {ArityMismatch{cert.at("n").get<int>(), cert.at("m").get<int>()}};
    if (kind == "no_permutation")
        return {NoPermutation{cert.at("sigma").get<std::vector<int>>(), word_from_json(cert.at("word")),
                              rational_from_json(cert.at("expected")), rational_from_json(cert.at("found"))}};
    throw Error("unknown certificate kind '" + kind + "'");
}

Json to_json(const WeightTable& t)
{
    Json rows = Json::array();
    const auto& index = t.index();
    for (std::size_t i = 0; i < index.dimension(); ++i) {
        Json row = rational_to_json(t.at(i));
        row["word"] = word_to_json(index.word(i));
        rows.push_back(std::move(row));
    }
    return Json{{"weights", std::move(rows)}};
}

std::vector<std::pair<Word, Rational>> weights_from_json(const Json& j)
{
    std::vector<std::pair<Word, Rational>> out;
    for (const auto& row : j.at("weights"))
        out.emplace_back(word_from_json(row.at("word")), rational_from_json(row));
    return out;
}

Json to_json(const ShiftFamily& s)
{
    Json shifts = Json::array();
    for (std::size_t j = 0; j < s.shifts.size(); ++j) {
        const auto& w = s.shifts[j];
        Json entries = Json::array();
        for (std::size_t col = 0; col < w.dimension(); ++col)
            if (w.row(col) != ShiftOperator::kEmpty)
                entries.push_back(Json::array({w.row(col), col, w.value(col), 0.0}));
        shifts.push_back(Json{{"j", j + 1}, {"entries", std::move(entries)}});
    }
    return Json{{"n", s.index().arity()},
                {"N", s.index().depth()},
                {"dim", s.index().dimension()},
                {"order", "graded-lex"},
                {"shifts", std::move(shifts)}};
}

std::vector<ShiftOperator> shifts_from_json(const Json& j)
{
    if (j.at("order").get<std::string>() != "graded-lex")
        throw Error("unsupported basis order");
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<ShiftOperator> out;
    for (const auto& s : j.at("shifts")) {
        ShiftOperator w(dim);
        for (const auto& e : s.at("entries")) {
            if (e.at(3).get<double>() != 0.0)
                throw Error("shift entries are real");
            w.set(e.at(1).get<std::size_t>(), e.at(0).get<std::size_t>(), e.at(2).get<double>());
        }
        out.push_back(std::move(w));
    }
    return out;
}

Json to_json(const MembershipReport& r)
{
    return Json{{"min_eig", r.min_eig}, {"tolerance", r.tolerance}, {"member", r.member}, {"dimension", r.dimension}};
}

MembershipReport membership_from_json(const Json& j)
{
    return MembershipReport{j.at("min_eig").get<double>(), j.at("tolerance").get<double>(),
                            j.at("member").get<bool>(), j.at("dimension").get<std::size_t>()};
}

Json to_json(const ComplexVector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(Json::array({v[i].real(), v[i].imag()}));
    return out;
}

namespace {

Complex complex_from_json(const Json& e)
{
    if (e.is_number())
        return Complex(e.get<double>(), 0.0);
    if (e.is_array() && e.size() == 2)
        return Complex(e[0].get<double>(), e[1].get<double>());
    throw Error("complex entries must be numbers or [re, im] pairs");
}

} // namespace

ComplexVector complex_vector_from_json(const Json& j)
{
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
    return v;
}

Json to_json(const CircleFit& c)
{
    return Json{{"center", to_json(c.center)}, {"radius", c.radius}, {"residual", c.residual}};
}

OperatorTuple operator_tuple_from_json(const Json& j)
{
    std::vector<ComplexMatrix> mats;
    for (const auto& m : j.at("matrices")) {
        const auto rows = static_cast<Eigen::Index>(m.size());
        ComplexMatrix out(rows, rows);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const Json& row = m[static_cast<std::size_t>(r)];
            if (static_cast<Eigen::Index>(row.size()) != rows)
                throw DimensionError("tuple matrices must be square");
            for (Eigen::Index c = 0; c < rows; ++c)
                out(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
        mats.push_back(std::move(out));
    }
    return OperatorTuple::from_dense(mats);
}

} // namespace ncd
