"""Reference polynomial tables, in canonical rendering, keyed by (family, n).

``AS``, ``AB`` and ``AD`` are the generating polynomials of the major index
over even-length derangements in S_n, B_n and D_n; ``D`` is the one over all
derangements in D_n.
"""

GOLDEN: dict[tuple[str, int], str] = {
    ("AS", 1): "0",
    ("AS", 2): "0",
    ("AS", 3): "q + q^2",
    ("AS", 4): "q^2 + q^4 + q^6",
    ("AS", 5): "q + 2*q^2 + 3*q^3 + 4*q^4 + 4*q^5 + 4*q^6 + 3*q^7 + 2*q^8 + q^9",
    ("AS", 6): "2*q^2 + 3*q^3 + 8*q^4 + 10*q^5 + 17*q^6 + 17*q^7 + 21*q^8 + 17*q^9"
               " + 16*q^10 + 9*q^11 + 7*q^12 + 2*q^13 + q^14",

    ("AB", 1): "0",
    ("AB", 2): "q + q^2 + q^3",
    ("AB", 3): "2*q^2 + q^3 + 3*q^4 + 2*q^5 + 2*q^6 + 2*q^7 + q^8 + q^9",
    ("AB", 4): "q + 2*q^2 + 5*q^3 + 6*q^4 + 10*q^5 + 10*q^6 + 14*q^7 + 13*q^8"
               " + 14*q^9 + 12*q^10 + 10*q^11 + 9*q^12 + 5*q^13 + 4*q^14 + q^15 + q^16",
    ("AB", 5): "3*q^2 + 5*q^3 + 14*q^4 + 20*q^5 + 34*q^6 + 44*q^7 + 61*q^8 + 73*q^9"
               " + 87*q^10 + 97*q^11 + 103*q^12 + 106*q^13 + 101*q^14 + 96*q^15"
               " + 83*q^16 + 72*q^17 + 56*q^18 + 43*q^19 + 29*q^20 + 19*q^21"
               " + 11*q^22 + 5*q^23 + 2*q^24",

    ("D", 1): "0",
    ("D", 2): "2*q + q^2",
    ("D", 3): "2*q + 3*q^2 + 4*q^3 + 3*q^4 + 2*q^5",
    ("D", 4): "2*q + 4*q^2 + 12*q^3 + 12*q^4 + 20*q^5 + 16*q^6 + 20*q^7 + 13*q^8"
              " + 10*q^9 + 5*q^10 + 2*q^11 + q^12",
    ("D", 5): "2*q + 5*q^2 + 21*q^3 + 26*q^4 + 61*q^5 + 62*q^6 + 108*q^7 + 100*q^8"
              " + 141*q^9 + 118*q^10 + 136*q^11 + 105*q^12 + 99*q^13 + 69*q^14"
              " + 52*q^15 + 31*q^16 + 17*q^17 + 8*q^18 + 3*q^19",

    ("AD", 1): "0",
    ("AD", 2): "q",
    ("AD", 3): "q + 2*q^2 + 2*q^3 + 2*q^4 + q^5",
    ("AD", 4): "q + 2*q^2 + 6*q^3 + 5*q^4 + 10*q^5 + 7*q^6 + 10*q^7 + 6*q^8 + 5*q^9"
               " + 3*q^10 + q^11 + q^12",
    ("AD", 5): "q + 3*q^2 + 11*q^3 + 14*q^4 + 31*q^5 + 32*q^6 + 54*q^7 + 51*q^8"
               " + 70*q^9 + 59*q^10 + 67*q^11 + 52*q^12 + 49*q^13 + 34*q^14"
               " + 26*q^15 + 15*q^16 + 9*q^17 + 4*q^18 + 2*q^19",
}
