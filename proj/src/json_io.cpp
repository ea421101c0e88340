#include "exotic/json_io.hpp"

#include "exotic/errors.hpp"

#include <limits>

namespace exotic::json_io {

json parse(const std::string& text, const std::string& what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError("malformed JSON for " + what + " at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Weight to_weight(const json& j, const std::string& what)
{
    if (!j.is_array())
        throw DomainError(what + " must be a JSON array of integers");
    std::vector<int> c;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw DomainError(what + " must contain only integers");
        const auto v = e.get<long long>();
        if (v < std::numeric_limits<int>::min() / 4 || v > std::numeric_limits<int>::max() / 4)
            throw DomainError(what + " entry out of range");
        c.push_back(static_cast<int>(v));
    }
    return Weight(std::move(c));
}

json from_weight(const Weight& w) { return json(w.vec()); }

Partition to_partition(const json& j, const std::string& what)
{
    const Weight w = to_weight(j, what);
    return Partition(w.vec());
}

json from_partition(const Partition& p) { return json(p.parts()); }

json from_bipartition(const Bipartition& b)
{
    return json{{"mu", from_partition(b.mu)}, {"nu", from_partition(b.nu)}};
}

mpq_class to_rational(const json& j)
{
    if (j.is_number_integer())
        return mpq_class(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0)
            throw DomainError("not a rational: \"" + j.get<std::string>() + "\"");
        if (q.get_den() == 0)
            throw DomainError("zero denominator in \"" + j.get<std::string>() + "\"");
        q.canonicalize();
        return q;
    }
    throw DomainError("rationals must be integers or \"p/q\" strings, got " + j.dump());
}

json from_rational(const mpq_class& q)
{
    if (q.get_den() == 1)
        return from_integer(q.get_num());
    return q.get_str();
}

json from_integer(const mpz_class& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

RatVector to_vector(const json& j)
{
    if (!j.is_array())
        throw DomainError("vector must be a JSON array");
    RatVector v;
    for (const auto& e : j)
        v.push_back(to_rational(e));
    return v;
}

RatMatrix to_matrix(const json& j)
{
    if (!j.is_array())
        throw DomainError("matrix must be an array of rows");
    std::vector<RatVector> rows;
    for (const auto& r : j)
        rows.push_back(to_vector(r));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return RatMatrix::from_rows(rows, cols);
}

json from_vector(const RatVector& v)
{
    json out = json::array();
    for (const auto& q : v)
        out.push_back(from_rational(q));
    return out;
}

json from_matrix(const RatMatrix& m)
{
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(from_vector(m.row(r)));
    return out;
}

ExoticPair to_pair(const json& j)
{
    if (!j.is_object() || !j.contains("v") || !j.contains("x"))
        throw DomainError("pair file needs an object with \"v\" and \"x\"");
    ExoticPair pair;
    pair.v = to_vector(j.at("v"));
    pair.x = to_matrix(j.at("x"));
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || 2 * j.at("n").get<long long>() != static_cast<long long>(pair.v.size()))
            throw DomainError("\"n\" does not match the length of v");
    }
    if (j.contains("omega") && !j.at("omega").is_null()) {
        SymplecticSpace s;
        s.n = static_cast<int>(pair.v.size() / 2);
        s.omega = to_matrix(j.at("omega"));
        pair.space = std::move(s);
    }
    pair.validate_shape();
    return pair;
}

json from_pair(const ExoticPair& pair)
{
    json out{{"n", pair.n()}, {"v", from_vector(pair.v)}, {"x", from_matrix(pair.x)}};
    if (pair.space)
        out["omega"] = from_matrix(pair.space->omega);
    return out;
}

} // namespace exotic::json_io
