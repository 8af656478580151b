// Term table for the 18 characteristic coefficients of the 3+3 network.
// Each entry is one product  k_a k_b ... * phi_ij ... * varphi_ij ...
// k indices run 1..6, gain indices are written as two digits "ij".
// Unused slots are zero.

#include "fracbam/charpoly.hpp"

namespace fracbam {

namespace {
using C = Coeff;
}

const std::array<CoeffTerm, 387>& coefficient_terms() {
  static const std::array<CoeffTerm, 387> table = {{
    // c11: 6 terms
    {C::c11, {1}, {}, {}},
    {C::c11, {2}, {}, {}},
    {C::c11, {3}, {}, {}},
    {C::c11, {4}, {}, {}},
    {C::c11, {5}, {}, {}},
    {C::c11, {6}, {}, {}},
    // c21: 15 terms
    {C::c21, {1, 2}, {}, {}},
    {C::c21, {1, 3}, {}, {}},
    {C::c21, {1, 4}, {}, {}},
    {C::c21, {1, 5}, {}, {}},
    {C::c21, {1, 6}, {}, {}},
    {C::c21, {2, 3}, {}, {}},
    {C::c21, {2, 4}, {}, {}},
    {C::c21, {2, 5}, {}, {}},
    {C::c21, {2, 6}, {}, {}},
    {C::c21, {3, 4}, {}, {}},
    {C::c21, {3, 5}, {}, {}},
    {C::c21, {3, 6}, {}, {}},
    {C::c21, {4, 5}, {}, {}},
    {C::c21, {4, 6}, {}, {}},
    {C::c21, {5, 6}, {}, {}},
    // c22: 9 terms
    {C::c22, {}, {11}, {11}},
    {C::c22, {}, {12}, {21}},
    {C::c22, {}, {13}, {31}},
    {C::c22, {}, {21}, {12}},
    {C::c22, {}, {22}, {22}},
    {C::c22, {}, {23}, {32}},
    {C::c22, {}, {31}, {13}},
    {C::c22, {}, {32}, {23}},
    {C::c22, {}, {33}, {33}},
    // c31: 20 terms
    {C::c31, {1, 2, 3}, {}, {}},
    {C::c31, {1, 2, 4}, {}, {}},
    {C::c31, {1, 2, 5}, {}, {}},
    {C::c31, {1, 2, 6}, {}, {}},
    {C::c31, {1, 3, 4}, {}, {}},
    {C::c31, {1, 3, 5}, {}, {}},
    {C::c31, {1, 3, 6}, {}, {}},
    {C::c31, {1, 4, 5}, {}, {}},
    {C::c31, {1, 4, 6}, {}, {}},
    {C::c31, {1, 5, 6}, {}, {}},
    {C::c31, {2, 3, 4}, {}, {}},
    {C::c31, {2, 3, 5}, {}, {}},
    {C::c31, {2, 3, 6}, {}, {}},
    {C::c31, {2, 4, 5}, {}, {}},
    {C::c31, {2, 4, 6}, {}, {}},
    {C::c31, {2, 5, 6}, {}, {}},
    {C::c31, {3, 4, 5}, {}, {}},
    {C::c31, {3, 4, 6}, {}, {}},
    {C::c31, {3, 5, 6}, {}, {}},
    {C::c31, {4, 5, 6}, {}, {}},
    // c32: 36 terms
    {C::c32, {1}, {21}, {12}},
    {C::c32, {1}, {22}, {22}},
    {C::c32, {1}, {23}, {32}},
    {C::c32, {1}, {31}, {13}},
    {C::c32, {1}, {32}, {23}},
    {C::c32, {1}, {33}, {33}},
    {C::c32, {2}, {11}, {11}},
    {C::c32, {2}, {12}, {21}},
    {C::c32, {2}, {13}, {31}},
    {C::c32, {2}, {31}, {13}},
    {C::c32, {2}, {32}, {23}},
    {C::c32, {2}, {33}, {33}},
    {C::c32, {3}, {11}, {11}},
    {C::c32, {3}, {12}, {21}},
    {C::c32, {3}, {13}, {31}},
    {C::c32, {3}, {21}, {12}},
    {C::c32, {3}, {22}, {22}},
    {C::c32, {3}, {23}, {32}},
    {C::c32, {4}, {12}, {21}},
    {C::c32, {4}, {13}, {31}},
    {C::c32, {4}, {22}, {22}},
    {C::c32, {4}, {23}, {32}},
    {C::c32, {4}, {32}, {23}},
    {C::c32, {4}, {33}, {33}},
    {C::c32, {5}, {11}, {11}},
    {C::c32, {5}, {13}, {31}},
    {C::c32, {5}, {21}, {12}},
    {C::c32, {5}, {23}, {32}},
    {C::c32, {5}, {31}, {13}},
    {C::c32, {5}, {33}, {33}},
    {C::c32, {6}, {11}, {11}},
    {C::c32, {6}, {12}, {21}},
    {C::c32, {6}, {21}, {12}},
    {C::c32, {6}, {22}, {22}},
    {C::c32, {6}, {31}, {13}},
    {C::c32, {6}, {32}, {23}},
    // c41: 15 terms
    {C::c41, {1, 2, 3, 4}, {}, {}},
    {C::c41, {1, 2, 3, 5}, {}, {}},
    {C::c41, {1, 2, 3, 6}, {}, {}},
    {C::c41, {1, 2, 4, 5}, {}, {}},
    {C::c41, {1, 2, 4, 6}, {}, {}},
    {C::c41, {1, 2, 5, 6}, {}, {}},
    {C::c41, {1, 3, 4, 5}, {}, {}},
    {C::c41, {1, 3, 4, 6}, {}, {}},
    {C::c41, {1, 3, 5, 6}, {}, {}},
    {C::c41, {1, 4, 5, 6}, {}, {}},
    {C::c41, {2, 3, 4, 5}, {}, {}},
    {C::c41, {2, 3, 4, 6}, {}, {}},
    {C::c41, {2, 3, 5, 6}, {}, {}},
    {C::c41, {2, 4, 5, 6}, {}, {}},
    {C::c41, {3, 4, 5, 6}, {}, {}},
    // c42: 54 terms
    {C::c42, {1, 2}, {31}, {13}},
    {C::c42, {1, 2}, {32}, {23}},
    {C::c42, {1, 2}, {33}, {33}},
    {C::c42, {1, 3}, {21}, {12}},
    {C::c42, {1, 3}, {22}, {22}},
    {C::c42, {1, 3}, {23}, {32}},
    {C::c42, {1, 4}, {22}, {22}},
    {C::c42, {1, 4}, {23}, {32}},
    {C::c42, {1, 4}, {32}, {23}},
    {C::c42, {1, 4}, {33}, {33}},
    {C::c42, {1, 5}, {21}, {12}},
    {C::c42, {1, 5}, {23}, {32}},
    {C::c42, {1, 5}, {31}, {13}},
    {C::c42, {1, 5}, {33}, {33}},
    {C::c42, {1, 6}, {21}, {12}},
    {C::c42, {1, 6}, {22}, {22}},
    {C::c42, {1, 6}, {31}, {13}},
    {C::c42, {1, 6}, {32}, {23}},
    {C::c42, {2, 3}, {11}, {11}},
    {C::c42, {2, 3}, {12}, {21}},
    {C::c42, {2, 3}, {13}, {31}},
    {C::c42, {2, 4}, {12}, {21}},
    {C::c42, {2, 4}, {13}, {31}},
    {C::c42, {2, 4}, {32}, {23}},
    {C::c42, {2, 4}, {33}, {33}},
    {C::c42, {2, 5}, {11}, {11}},
    {C::c42, {2, 5}, {13}, {31}},
    {C::c42, {2, 5}, {31}, {13}},
    {C::c42, {2, 5}, {33}, {33}},
    {C::c42, {2, 6}, {11}, {11}},
    {C::c42, {2, 6}, {12}, {21}},
    {C::c42, {2, 6}, {31}, {13}},
    {C::c42, {2, 6}, {32}, {23}},
    {C::c42, {3, 4}, {12}, {21}},
    {C::c42, {3, 4}, {13}, {31}},
    {C::c42, {3, 4}, {22}, {22}},
    {C::c42, {3, 4}, {23}, {32}},
    {C::c42, {3, 5}, {11}, {11}},
    {C::c42, {3, 5}, {13}, {31}},
    {C::c42, {3, 5}, {21}, {12}},
    {C::c42, {3, 5}, {23}, {32}},
    {C::c42, {3, 6}, {11}, {11}},
    {C::c42, {3, 6}, {12}, {21}},
    {C::c42, {3, 6}, {21}, {12}},
    {C::c42, {3, 6}, {22}, {22}},
    {C::c42, {4, 5}, {13}, {31}},
    {C::c42, {4, 5}, {23}, {32}},
    {C::c42, {4, 5}, {33}, {33}},
    {C::c42, {4, 6}, {12}, {21}},
    {C::c42, {4, 6}, {22}, {22}},
    {C::c42, {4, 6}, {32}, {23}},
    {C::c42, {5, 6}, {11}, {11}},
    {C::c42, {5, 6}, {21}, {12}},
    {C::c42, {5, 6}, {31}, {13}},
    // c43: 18 terms
    {C::c43, {}, {11, 22}, {11, 22}},
    {C::c43, {}, {11, 23}, {11, 32}},
    {C::c43, {}, {11, 32}, {11, 23}},
    {C::c43, {}, {11, 33}, {11, 33}},
    {C::c43, {}, {12, 21}, {12, 21}},
    {C::c43, {}, {12, 23}, {21, 32}},
    {C::c43, {}, {12, 31}, {13, 21}},
    {C::c43, {}, {12, 33}, {21, 33}},
    {C::c43, {}, {13, 21}, {12, 31}},
    {C::c43, {}, {13, 22}, {22, 31}},
    {C::c43, {}, {13, 31}, {13, 31}},
    {C::c43, {}, {13, 32}, {23, 31}},
    {C::c43, {}, {21, 32}, {12, 23}},
    {C::c43, {}, {21, 33}, {12, 33}},
    {C::c43, {}, {22, 31}, {13, 22}},
    {C::c43, {}, {22, 33}, {22, 33}},
    {C::c43, {}, {23, 31}, {13, 32}},
    {C::c43, {}, {23, 32}, {23, 32}},
    // c44: 18 terms
    {C::c44, {}, {11, 22}, {12, 21}},
    {C::c44, {}, {11, 23}, {12, 31}},
    {C::c44, {}, {11, 32}, {13, 21}},
    {C::c44, {}, {11, 33}, {13, 31}},
    {C::c44, {}, {12, 21}, {11, 22}},
    {C::c44, {}, {12, 23}, {22, 31}},
    {C::c44, {}, {12, 31}, {11, 23}},
    {C::c44, {}, {12, 33}, {23, 31}},
    {C::c44, {}, {13, 21}, {11, 32}},
    {C::c44, {}, {13, 22}, {21, 32}},
    {C::c44, {}, {13, 31}, {11, 33}},
    {C::c44, {}, {13, 32}, {21, 33}},
    {C::c44, {}, {21, 32}, {13, 22}},
    {C::c44, {}, {21, 33}, {13, 32}},
    {C::c44, {}, {22, 31}, {12, 23}},
    {C::c44, {}, {22, 33}, {23, 32}},
    {C::c44, {}, {23, 31}, {12, 33}},
    {C::c44, {}, {23, 32}, {22, 33}},
    // c51: 6 terms
    {C::c51, {1, 2, 3, 4, 5}, {}, {}},
    {C::c51, {1, 2, 3, 4, 6}, {}, {}},
    {C::c51, {1, 2, 3, 5, 6}, {}, {}},
    {C::c51, {1, 2, 4, 5, 6}, {}, {}},
    {C::c51, {1, 3, 4, 5, 6}, {}, {}},
    {C::c51, {2, 3, 4, 5, 6}, {}, {}},
    // c52: 36 terms
    {C::c52, {1, 2, 4}, {32}, {23}},
    {C::c52, {1, 2, 4}, {33}, {33}},
    {C::c52, {1, 2, 5}, {31}, {13}},
    {C::c52, {1, 2, 5}, {33}, {33}},
    {C::c52, {1, 2, 6}, {31}, {13}},
    {C::c52, {1, 2, 6}, {32}, {23}},
    {C::c52, {1, 3, 4}, {22}, {22}},
    {C::c52, {1, 3, 4}, {23}, {32}},
    {C::c52, {1, 3, 5}, {21}, {12}},
    {C::c52, {1, 3, 5}, {23}, {32}},
    {C::c52, {1, 3, 6}, {21}, {12}},
    {C::c52, {1, 3, 6}, {22}, {22}},
    {C::c52, {1, 4, 5}, {23}, {32}},
    {C::c52, {1, 4, 5}, {33}, {33}},
    {C::c52, {1, 4, 6}, {22}, {22}},
    {C::c52, {1, 4, 6}, {32}, {23}},
    {C::c52, {1, 5, 6}, {21}, {12}},
    {C::c52, {1, 5, 6}, {31}, {13}},
    {C::c52, {2, 3, 4}, {12}, {21}},
    {C::c52, {2, 3, 4}, {13}, {31}},
    {C::c52, {2, 3, 5}, {11}, {11}},
    {C::c52, {2, 3, 5}, {13}, {31}},
    {C::c52, {2, 3, 6}, {11}, {11}},
    {C::c52, {2, 3, 6}, {12}, {21}},
    {C::c52, {2, 4, 5}, {13}, {31}},
    {C::c52, {2, 4, 5}, {33}, {33}},
    {C::c52, {2, 4, 6}, {12}, {21}},
    {C::c52, {2, 4, 6}, {32}, {23}},
    {C::c52, {2, 5, 6}, {11}, {11}},
    {C::c52, {2, 5, 6}, {31}, {13}},
    {C::c52, {3, 4, 5}, {13}, {31}},
    {C::c52, {3, 4, 5}, {23}, {32}},
    {C::c52, {3, 4, 6}, {12}, {21}},
    {C::c52, {3, 4, 6}, {22}, {22}},
    {C::c52, {3, 5, 6}, {11}, {11}},
    {C::c52, {3, 5, 6}, {21}, {12}},
    // c53: 36 terms
    {C::c53, {1}, {21, 32}, {12, 23}},
    {C::c53, {1}, {21, 33}, {12, 33}},
    {C::c53, {1}, {22, 31}, {13, 22}},
    {C::c53, {1}, {22, 33}, {22, 33}},
    {C::c53, {1}, {23, 31}, {13, 32}},
    {C::c53, {1}, {23, 32}, {23, 32}},
    {C::c53, {2}, {11, 32}, {11, 23}},
    {C::c53, {2}, {11, 33}, {11, 33}},
    {C::c53, {2}, {12, 31}, {13, 21}},
    {C::c53, {2}, {12, 33}, {21, 33}},
    {C::c53, {2}, {13, 31}, {13, 31}},
    {C::c53, {2}, {13, 32}, {23, 31}},
    {C::c53, {3}, {11, 22}, {11, 22}},
    {C::c53, {3}, {11, 23}, {11, 32}},
    {C::c53, {3}, {12, 21}, {12, 21}},
    {C::c53, {3}, {12, 23}, {21, 32}},
    {C::c53, {3}, {13, 21}, {12, 31}},
    {C::c53, {3}, {13, 22}, {22, 31}},
    {C::c53, {4}, {12, 23}, {21, 32}},
    {C::c53, {4}, {12, 33}, {21, 33}},
    {C::c53, {4}, {13, 22}, {22, 31}},
    {C::c53, {4}, {13, 32}, {23, 31}},
    {C::c53, {4}, {22, 33}, {22, 33}},
    {C::c53, {4}, {23, 32}, {23, 32}},
    {C::c53, {5}, {11, 23}, {11, 32}},
    {C::c53, {5}, {11, 33}, {11, 33}},
    {C::c53, {5}, {13, 21}, {12, 31}},
    {C::c53, {5}, {13, 31}, {13, 31}},
    {C::c53, {5}, {21, 33}, {12, 33}},
    {C::c53, {5}, {23, 31}, {13, 32}},
    {C::c53, {6}, {11, 22}, {11, 22}},
    {C::c53, {6}, {11, 32}, {11, 23}},
    {C::c53, {6}, {12, 21}, {12, 21}},
    {C::c53, {6}, {12, 31}, {13, 21}},
    {C::c53, {6}, {21, 32}, {12, 23}},
    {C::c53, {6}, {22, 31}, {13, 22}},
    // c54: 36 terms
    {C::c54, {1}, {21, 32}, {13, 22}},
    {C::c54, {1}, {21, 33}, {13, 32}},
    {C::c54, {1}, {22, 31}, {12, 23}},
    {C::c54, {1}, {22, 33}, {23, 32}},
    {C::c54, {1}, {23, 31}, {12, 33}},
    {C::c54, {1}, {23, 32}, {22, 33}},
    {C::c54, {2}, {11, 32}, {13, 21}},
    {C::c54, {2}, {11, 33}, {13, 31}},
    {C::c54, {2}, {12, 31}, {11, 23}},
    {C::c54, {2}, {12, 33}, {23, 31}},
    {C::c54, {2}, {13, 31}, {11, 33}},
    {C::c54, {2}, {13, 32}, {21, 33}},
    {C::c54, {3}, {11, 22}, {12, 21}},
    {C::c54, {3}, {11, 23}, {12, 31}},
    {C::c54, {3}, {12, 21}, {11, 22}},
    {C::c54, {3}, {12, 23}, {22, 31}},
    {C::c54, {3}, {13, 21}, {11, 32}},
    {C::c54, {3}, {13, 22}, {21, 32}},
    {C::c54, {4}, {12, 23}, {22, 31}},
    {C::c54, {4}, {12, 33}, {23, 31}},
    {C::c54, {4}, {13, 22}, {21, 32}},
    {C::c54, {4}, {13, 32}, {21, 33}},
    {C::c54, {4}, {22, 33}, {23, 32}},
    {C::c54, {4}, {23, 32}, {22, 33}},
    {C::c54, {5}, {11, 23}, {12, 31}},
    {C::c54, {5}, {11, 33}, {13, 31}},
    {C::c54, {5}, {13, 21}, {11, 32}},
    {C::c54, {5}, {13, 31}, {11, 33}},
    {C::c54, {5}, {21, 33}, {13, 32}},
    {C::c54, {5}, {23, 31}, {12, 33}},
    {C::c54, {6}, {11, 22}, {12, 21}},
    {C::c54, {6}, {11, 32}, {13, 21}},
    {C::c54, {6}, {12, 21}, {11, 22}},
    {C::c54, {6}, {12, 31}, {11, 23}},
    {C::c54, {6}, {21, 32}, {13, 22}},
    {C::c54, {6}, {22, 31}, {12, 23}},
    // c61: 19 terms
    {C::c61, {1, 2, 3, 4, 5, 6}, {}, {}},
    {C::c61, {}, {11, 22, 33}, {11, 23, 32}},
    {C::c61, {}, {11, 22, 33}, {12, 21, 33}},
    {C::c61, {}, {11, 22, 33}, {13, 22, 31}},
    {C::c61, {}, {11, 23, 32}, {11, 22, 33}},
    {C::c61, {}, {11, 23, 32}, {12, 23, 31}},
    {C::c61, {}, {11, 23, 32}, {13, 21, 32}},
    {C::c61, {}, {12, 21, 33}, {11, 22, 33}},
    {C::c61, {}, {12, 21, 33}, {12, 23, 31}},
    {C::c61, {}, {12, 21, 33}, {13, 21, 32}},
    {C::c61, {}, {12, 23, 31}, {11, 23, 32}},
    {C::c61, {}, {12, 23, 31}, {12, 21, 33}},
    {C::c61, {}, {12, 23, 31}, {13, 22, 31}},
    {C::c61, {}, {13, 21, 32}, {11, 23, 32}},
    {C::c61, {}, {13, 21, 32}, {12, 21, 33}},
    {C::c61, {}, {13, 21, 32}, {13, 22, 31}},
    {C::c61, {}, {13, 22, 31}, {11, 22, 33}},
    {C::c61, {}, {13, 22, 31}, {12, 23, 31}},
    {C::c61, {}, {13, 22, 31}, {13, 21, 32}},
    // c62: 9 terms
    {C::c62, {1, 2, 4, 5}, {33}, {33}},
    {C::c62, {1, 2, 4, 6}, {32}, {23}},
    {C::c62, {1, 2, 5, 6}, {31}, {13}},
    {C::c62, {1, 3, 4, 5}, {23}, {32}},
    {C::c62, {1, 3, 4, 6}, {22}, {22}},
    {C::c62, {1, 3, 5, 6}, {21}, {12}},
    {C::c62, {2, 3, 4, 5}, {13}, {31}},
    {C::c62, {2, 3, 4, 6}, {12}, {21}},
    {C::c62, {2, 3, 5, 6}, {11}, {11}},
    // c63: 18 terms
    {C::c63, {1, 4}, {22, 33}, {22, 33}},
    {C::c63, {1, 4}, {23, 32}, {23, 32}},
    {C::c63, {1, 5}, {21, 33}, {12, 33}},
    {C::c63, {1, 5}, {23, 31}, {13, 32}},
    {C::c63, {1, 6}, {21, 32}, {12, 23}},
    {C::c63, {1, 6}, {22, 31}, {13, 22}},
    {C::c63, {2, 4}, {12, 33}, {21, 33}},
    {C::c63, {2, 4}, {13, 32}, {23, 31}},
    {C::c63, {2, 5}, {11, 33}, {11, 33}},
    {C::c63, {2, 5}, {13, 31}, {13, 31}},
    {C::c63, {2, 6}, {11, 32}, {11, 23}},
    {C::c63, {2, 6}, {12, 31}, {13, 21}},
    {C::c63, {3, 4}, {12, 23}, {21, 32}},
    {C::c63, {3, 4}, {13, 22}, {22, 31}},
    {C::c63, {3, 5}, {11, 23}, {11, 32}},
    {C::c63, {3, 5}, {13, 21}, {12, 31}},
    {C::c63, {3, 6}, {11, 22}, {11, 22}},
    {C::c63, {3, 6}, {12, 21}, {12, 21}},
    // c64: 18 terms
    {C::c64, {1, 4}, {22, 33}, {23, 32}},
    {C::c64, {1, 4}, {23, 32}, {22, 33}},
    {C::c64, {1, 5}, {21, 33}, {13, 32}},
    {C::c64, {1, 5}, {23, 31}, {12, 33}},
    {C::c64, {1, 6}, {21, 32}, {13, 22}},
    {C::c64, {1, 6}, {22, 31}, {12, 23}},
    {C::c64, {2, 4}, {12, 33}, {23, 31}},
    {C::c64, {2, 4}, {13, 32}, {21, 33}},
    {C::c64, {2, 5}, {11, 33}, {13, 31}},
    {C::c64, {2, 5}, {13, 31}, {11, 33}},
    {C::c64, {2, 6}, {11, 32}, {13, 21}},
    {C::c64, {2, 6}, {12, 31}, {11, 23}},
    {C::c64, {3, 4}, {12, 23}, {22, 31}},
    {C::c64, {3, 4}, {13, 22}, {21, 32}},
    {C::c64, {3, 5}, {11, 23}, {12, 31}},
    {C::c64, {3, 5}, {13, 21}, {11, 32}},
    {C::c64, {3, 6}, {11, 22}, {12, 21}},
    {C::c64, {3, 6}, {12, 21}, {11, 22}},
    // c65: 18 terms
    {C::c65, {}, {11, 22, 33}, {11, 22, 33}},
    {C::c65, {}, {11, 22, 33}, {12, 23, 31}},
    {C::c65, {}, {11, 22, 33}, {13, 21, 32}},
    {C::c65, {}, {11, 23, 32}, {11, 23, 32}},
    {C::c65, {}, {11, 23, 32}, {12, 21, 33}},
    {C::c65, {}, {11, 23, 32}, {13, 22, 31}},
    {C::c65, {}, {12, 21, 33}, {11, 23, 32}},
    {C::c65, {}, {12, 21, 33}, {12, 21, 33}},
    {C::c65, {}, {12, 21, 33}, {13, 22, 31}},
    {C::c65, {}, {12, 23, 31}, {11, 22, 33}},
    {C::c65, {}, {12, 23, 31}, {12, 23, 31}},
    {C::c65, {}, {12, 23, 31}, {13, 21, 32}},
    {C::c65, {}, {13, 21, 32}, {11, 22, 33}},
    {C::c65, {}, {13, 21, 32}, {12, 23, 31}},
    {C::c65, {}, {13, 21, 32}, {13, 21, 32}},
    {C::c65, {}, {13, 22, 31}, {11, 23, 32}},
    {C::c65, {}, {13, 22, 31}, {12, 21, 33}},
    {C::c65, {}, {13, 22, 31}, {13, 22, 31}},
  }};
  return table;
}

}  // namespace fracbam
