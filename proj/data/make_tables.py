#!/usr/bin/env python3
"""Regenerates the generator-matrix tables in this directory.

Codes:
  challenging_8_3.txt  -- the (8,3) three-independent-blocks code
  egolay_24_12.txt     -- extended binary Golay code, from the cyclic (23,12) code
  ebch_128_57.txt      -- extended BCH code, from the cyclic BCH(127,57) code
  random_16_8.txt      -- fixed (16,8) systematic code with a random parity part
  random_16_8_perm.txt -- companion length-16 permutation (one-line notation)
"""

import os

HERE = os.path.dirname(os.path.abspath(__file__))


def write_matrix(name, rows, n):
    k = len(rows)
    with open(os.path.join(HERE, name), "w") as f:
        f.write(f"{k} {n}\n")
        for r in rows:
            f.write(" ".join(str((r >> i) & 1) for i in range(n)) + "\n")


def cyclic_generator_rows(g_poly, n, k):
    """Rows x^i * g(x), i = 0..k-1, as bit-ints (bit j = coefficient of x^j)."""
    return [g_poly << i for i in range(k)]


def extend_even_parity(rows, n):
    """Append an overall parity bit so every row has even weight."""
    out = []
    for r in rows:
        par = bin(r).count("1") & 1
        out.append(r | (par << n))
    return out


def polymul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def bch_127_57_generator():
    # GF(2^7) with primitive polynomial x^7 + x^3 + 1
    prim = 0b10001001
    exp = [0] * 254
    log = [0] * 128
    x = 1
    for i in range(127):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & 0x80:
            x ^= prim
    for i in range(127, 254):
        exp[i] = exp[i - 127]

    def gmul(a, b):
        if a == 0 or b == 0:
            return 0
        return exp[(log[a] + log[b]) % 127]

    # cyclotomic cosets covering exponents 1..22 (designed distance 23)
    seen = set()
    g = 1
    for s in range(1, 23):
        if s in seen:
            continue
        coset = set()
        c = s
        while c not in coset:
            coset.add(c)
            c = (c * 2) % 127
        seen |= coset
        # minimal polynomial: prod (x - alpha^j) over the coset,
        # computed with GF(2^7) coefficients; result has GF(2) coefficients
        poly = [1]  # coefficients in GF(2^7), poly[i] = coeff of x^i, low degree first
        for j in coset:
            root = exp[j]
            # poly *= (x + root)
            nxt = [0] * (len(poly) + 1)
            for i, cf in enumerate(poly):
                nxt[i + 1] ^= cf
                nxt[i] ^= gmul(cf, root)
            poly = nxt
        assert all(cf in (0, 1) for cf in poly), "minimal polynomial not binary"
        mp = 0
        for i, cf in enumerate(poly):
            mp |= cf << i
        g = polymul(g, mp)
    deg = g.bit_length() - 1
    assert deg == 70, f"unexpected generator degree {deg}"
    return g


def golay_23_12_generator():
    # x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
    return 0b110001110101


def verify_golay(rows, n):
    k = len(rows)
    wd = {}
    for m in range(1 << k):
        cw = 0
        for i in range(k):
            if (m >> i) & 1:
                cw ^= rows[i]
        w = bin(cw).count("1")
        wd[w] = wd.get(w, 0) + 1
    assert wd == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, wd


def main():
    write_matrix("challenging_8_3.txt",
                 [0b00000111, 0b00111000, 0b11000000], 8)

    g23 = golay_23_12_generator()
    rows = extend_even_parity(cyclic_generator_rows(g23, 23, 12), 23)
    verify_golay(rows, 24)
    write_matrix("egolay_24_12.txt", rows, 24)

    g127 = bch_127_57_generator()
    rows = extend_even_parity(cyclic_generator_rows(g127, 127, 57), 127)
    write_matrix("ebch_128_57.txt", rows, 128)

    # (16,8) systematic code: identity plus a fixed Bernoulli(1/2) parity block
    prows = [
        [1, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1, 1, 0, 0],
        [1, 0, 1, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 0, 0, 1],
        [0, 1, 1, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 1, 0, 1, 0],
        [1, 0, 1, 0, 0, 1, 1, 1],
    ]
    rows = []
    for i in range(8):
        r = 1 << i
        for j, bit in enumerate(prows[i]):
            r |= bit << (8 + j)
        rows.append(r)
    write_matrix("random_16_8.txt", rows, 16)

    perm = [16, 4, 14, 10, 7, 6, 11, 13, 8, 3, 5, 2, 9, 1, 15, 12]
    with open(os.path.join(HERE, "random_16_8_perm.txt"), "w") as f:
        f.write(" ".join(map(str, perm)) + "\n")

    print("tables written")


if __name__ == "__main__":
    main()
