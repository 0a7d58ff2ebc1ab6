#include <codelab/toy_data.hpp>

namespace codelab::toy {

namespace {

Vec bits(const std::string& s)
{
    Vec v;
    for (char ch : s)
        if (ch == '0' || ch == '1') v.push_back(ch == '1');
    return v;
}

Vec elts(const Field& f, const std::vector<std::string>& xs)
{
    Vec v;
    for (auto& x : xs) v.push_back(f.parse(x));
    return v;
}

// rows of a permutation matrix: entry i is the (1-based) column holding the 1 in row i
Matrix perm_rows(FieldPtr f, const std::vector<size_t>& cols)
{
    std::vector<size_t> img;
    for (auto c : cols) img.push_back(c - 1);
    return Permutation(img).as_matrix(std::move(f));
}

}

HammingMcEliece hamming_mceliece()
{
    auto f = Field::make(2);
    HammingMcEliece t;
    t.g = Matrix::from_bits(f, {"1000110", "0100101", "0010011", "0001111"});
    t.s = Matrix::from_bits(f, {"0111", "1011", "1010", "0011"});
    t.p = perm_rows(f, {2, 4, 6, 1, 5, 3, 7});
    t.g_pub = Matrix::from_bits(f, {"1001011", "1110010", "0100111", "1000110"});
    t.m = bits("1011");
    t.e = bits("1000000");
    t.cipher = bits("1101010");
    t.c_perm = bits("1111000");
    t.ms = bits("1110");
    t.s_inv = Matrix::from_bits(f, {"0101", "1001", "0111", "0110"});
    t.g_rref = Matrix::from_bits(f, {"1000110", "0100111", "0010011", "0001101"});
    t.h_rref = Matrix::from_bits(f, {"1101100", "1110010", "0111001"});
    t.syndrome = bits("110");
    t.m_bar = bits("0101");
    return t;
}

NiederreiterToy niederreiter()
{
    auto f = Field::make(2);
    NiederreiterToy t;
    t.h = Matrix::from_bits(f, {"1101100", "1011010", "0111001"});
    t.s = Matrix::from_bits(f, {"110", "011", "001"});
    t.p = perm_rows(f, {2, 4, 6, 1, 5, 3, 7});
    t.h_pub = Matrix::from_bits(f, {"0011110", "0111001", "1001011"});
    t.m = bits("0010000");
    t.cipher = bits("110");
    t.s_inv_c = bits("010");
    t.m_perm = bits("0000010");
    return t;
}

AlekhnovichToy alekhnovich()
{
    auto f = Field::make(2);
    AlekhnovichToy t;
    t.a = Matrix::from_bits(f, {"110000", "101000", "000110", "000101"});
    t.x = bits("0101");
    t.e = bits("100000");
    t.y = bits("001101");
    t.h = Matrix::from_bits(f, {"110000", "101000", "000110", "000101", "001101"});
    t.g = Matrix::from_bits(f, {"000111"});
    t.c0 = bits("010111");
    t.c1 = bits("101001");
    return t;
}

QcToy qc()
{
    QcToy t;
    t.n = 7;
    t.h = bits("1110000");
    t.y = bits("1000000");
    t.z = bits("0001000");
    t.s = bits("1001110");
    t.e = bits("0100000");
    t.r1 = bits("0010000");
    t.r2 = bits("0010000");
    t.m = bits("1");
    t.u = bits("0001100");
    t.v = bits("0001100");
    t.s_r2 = bits("1010011");
    t.uz = bits("1000001");
    t.v_minus_uz = bits("1001101");
    return t;
}

GptToy gpt()
{
    GptToy t;
    t.f = Field::make(2, std::vector<uint32_t>{1, 0, 1, 0, 0, 1});
    const Field& f = *t.f;
    t.g = Matrix(t.f, {elts(f, {"1", "x", "x^2", "x^3"}), elts(f, {"1", "x^2", "x^4", "x^3+x"})});
    t.s = Matrix(t.f, {elts(f, {"1", "x"}), elts(f, {"0", "1"})});
    t.p = perm_rows(t.f, {3, 1, 2, 5, 4});
    t.x_col = Matrix(t.f, {elts(f, {"1"}), elts(f, {"x^2+1"})});
    t.g_pub = Matrix(t.f, {elts(f, {"x+1", "x^3+x", "x^3+x+1", "x^4+x^3+x^2", "1"}),
                           elts(f, {"1", "x^2", "x^2+1", "x^3+x", "x^4"})});
    t.m = elts(f, {"x+1", "x^2+1"});
    t.e = elts(f, {"x^3+1", "0", "x^3+1", "x^3+1", "0"});
    t.cipher = elts(f, {"x^3+1", "x^3+x", "x^2+1", "x^3+x^2+x+1", "x^4+x^3+1"});
    t.c_pinv = elts(f, {"x^2+1", "x^3+1", "x^3+x", "x^4+x^3+1", "x^3+x^2+x+1"});
    t.ms = elts(f, {"x+1", "x+1"});
    return t;
}

PrangeF5 prange_f5()
{
    auto f = Field::make(5);
    PrangeF5 t;
    t.h = Matrix::from_digits(f, {"3214304434", "2340123242", "3031402200", "2302314430", "0230203424", "2340220012"});
    t.s = {2, 4, 0, 2, 0, 4};
    t.t = 2;
    t.i1 = {0, 1, 2, 3};
    t.i2 = {0, 1, 2, 4};
    t.i_final = {6, 7, 8, 9};
    t.u2h = Matrix::from_digits(f, {"3411000000", "0330410000", "4420401000", "1440300100", "2020200010", "0130100001"});
    t.s2 = {0, 0, 3, 2, 4, 0};
    t.uh_final = Matrix::from_digits(f, {"1000004004", "0100001103", "0010004211", "0001000440", "0000102320", "0000012443"});
    t.s_final = {2, 0, 0, 4, 0, 0};
    t.e = {2, 0, 0, 4, 0, 0, 0, 0, 0, 0};
    return t;
}

TdmToy tdm()
{
    auto f = Field::make(2);
    TdmToy t;
    t.ground = {"A", "B", "C", "D"};
    t.triples = {{"D", "A", "B"}, {"C", "B", "A"}, {"D", "A", "B"}, {"B", "C", "D"},
                 {"C", "D", "A"}, {"A", "D", "A"}, {"A", "B", "C"}};
    t.ht = Matrix::from_bits(f, {"000110000100", "001001001000", "000110000100", "010000100001",
                                 "001000011000", "100000011000", "100001000010"});
    t.e = bits("1001101");
    t.matching = {0, 3, 4, 6};
    return t;
}

PunctureToy puncture_shorten()
{
    auto f = Field::make(2);
    PunctureToy t;
    t.g = Matrix::from_bits(f, {"100110", "010011", "001111"});
    t.t = {3, 4};
    t.punctured = Matrix::from_bits(f, {"1000", "0101", "0011"});
    t.shortened = Matrix::from_bits(f, {"1011"});
    return t;
}

}
