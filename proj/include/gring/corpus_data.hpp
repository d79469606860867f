#pragma once

// Bundled field-tower documents, kept in canonical emitted form so that
// parsing and re-emitting reproduces them byte for byte.

namespace gring::data {

// N = Q[x]/(x^6 + 108), the splitting field of t^3 - 2.
//   x^3 = +-6 sqrt(-3), so zeta = (-1 + x^3/6)/2 is a primitive cube root of 1.
//   theta_0 = x^4/18:  theta_0^3 = x^12/5832 = 108^2/5832 = 2.
//   theta_1 = zeta theta_0 = -x/2 - x^4/36,  theta_2 = zeta^2 theta_0 = x/2 - x^4/36.
//   theta_0^2 = -x^2/3, theta_1^2 = x^2/6 + x^5/36, theta_2^2 = x^2/6 - x^5/36.
// The roots of x^6 + 108 are mu x for the six sixth roots of unity
// mu = +-1, +-zeta, +-zeta^2, with zeta x = -x/2 + x^4/12 and
// zeta^2 x = -x/2 - x^4/12. Each conjugate Q(theta_i) has trivial
// automorphism group, so the two automorphisms carrying L_j onto L_i agree
// on L_j and the restrictions form the pair groupoid on three fields.
inline constexpr const char* cbrt2 = R"json({
  "field": "rational",
  "format": "gring-definition",
  "name": "cbrt2",
  "tower": {
    "automorphisms": [
      [
        "0",
        "1"
      ],
      [
        "0",
        "-1"
      ],
      [
        "0",
        "-1/2",
        "0",
        "0",
        "1/12"
      ],
      [
        "0",
        "1/2",
        "0",
        "0",
        "-1/12"
      ],
      [
        "0",
        "-1/2",
        "0",
        "0",
        "-1/12"
      ],
      [
        "0",
        "1/2",
        "0",
        "0",
        "1/12"
      ]
    ],
    "conjugates": [
      [
        [
          "1"
        ],
        [
          "0",
          "0",
          "0",
          "0",
          "1/18"
        ],
        [
          "0",
          "0",
          "-1/3"
        ]
      ],
      [
        [
          "1"
        ],
        [
          "0",
          "-1/2",
          "0",
          "0",
          "-1/36"
        ],
        [
          "0",
          "0",
          "1/6",
          "0",
          "0",
          "1/36"
        ]
      ],
      [
        [
          "1"
        ],
        [
          "0",
          "1/2",
          "0",
          "0",
          "-1/36"
        ],
        [
          "0",
          "0",
          "1/6",
          "0",
          "0",
          "-1/36"
        ]
      ]
    ],
    "modulus": [
      "108",
      "0",
      "0",
      "0",
      "0",
      "0",
      "1"
    ]
  },
  "version": 1
}
)json";

// N = Q[x]/(x^4 - 10x^2 + 1) with x = sqrt2 + sqrt3, Galois over Q with
// group C2 x C2. x^2 = 5 + 2 sqrt6 and x^3 = 11 sqrt2 + 9 sqrt3, so
// x^3 - 10x = sqrt2 - sqrt3. The automorphisms send x to
// sqrt2 + sqrt3, -sqrt2 - sqrt3, sqrt2 - sqrt3, -sqrt2 + sqrt3.
// Being biquadratic, the modulus factors modulo every prime, so the
// reduction certificate cannot apply and irreducibility is asserted: it has
// no rational root, and a quadratic factor over Q would put one of sqrt2,
// sqrt3, sqrt6 in Q.
inline constexpr const char* klein_galois = R"json({
  "field": "rational",
  "format": "gring-definition",
  "name": "klein-galois",
  "tower": {
    "automorphisms": [
      [
        "0",
        "1"
      ],
      [
        "0",
        "-1"
      ],
      [
        "0",
        "-10",
        "0",
        "1"
      ],
      [
        "0",
        "10",
        "0",
        "-1"
      ]
    ],
    "conjugates": [
      [
        [
          "1"
        ],
        [
          "0",
          "1"
        ],
        [
          "0",
          "0",
          "1"
        ],
        [
          "0",
          "0",
          "0",
          "1"
        ]
      ]
    ],
    "irreducible": "asserted",
    "modulus": [
      "1",
      "0",
      "-10",
      "0",
      "1"
    ]
  },
  "version": 1
}
)json";

}  // namespace gring::data
