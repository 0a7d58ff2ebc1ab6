#include <codelab/code.hpp>
#include <codelab/distinguish.hpp>

#include <algorithm>

namespace codelab {

namespace {

DistinguisherVerdict judge(size_t measured, size_t rnd, size_t structured, bool separable)
{
    DistinguisherVerdict v{measured, rnd, structured, Verdict::inconclusive};
    if (!separable) return v;
    if (measured == structured) v.verdict = Verdict::structured;
    else if (measured == rnd) v.verdict = Verdict::random;
    return v;
}

}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::structured: return "structured";
    case Verdict::random: return "random";
    default: return "inconclusive";
    }
}

nlohmann::json to_json(const DistinguisherVerdict& v)
{
    return {{"measured", v.measured},
            {"random_expected", v.random_expected},
            {"structured_expected", v.structured_expected},
            {"verdict", to_string(v.verdict)}};
}

DistinguisherVerdict square_distinguisher(const Matrix& g)
{
    auto code = LinearCode::from_generator(g);
    size_t n = code.n(), k = code.k();
    size_t structured = std::min(2 * k - 1, n), rnd = std::min(k * (k + 1) / 2, n);
    size_t measured = square_code(code).k();
    return judge(measured, rnd, structured, 2 * k - 1 < rnd);
}

Matrix frobenius_stack(const Matrix& m, size_t ell)
{
    const Field& f = *m.field();
    Matrix out(m.field(), m.rows() * (ell + 1), m.cols());
    for (size_t l = 0; l <= ell; ++l)
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) out.at(l * m.rows() + i, j) = f.frob(m(i, j), unsigned(l));
    return out;
}

DistinguisherVerdict frobenius_distinguisher(const Matrix& m, size_t ell)
{
    size_t n = m.cols(), k = m.rank();
    size_t structured = k + ell, rnd = std::min((ell + 1) * k, n);
    size_t measured = frobenius_stack(m, ell).rank();
    return judge(measured, rnd, structured, k + ell < rnd && ell + k + 1 <= n);
}

}
