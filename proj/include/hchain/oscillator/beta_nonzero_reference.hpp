#pragma once

#include <array>
#include <string_view>

namespace hchain::oscillator::reference {

// Published degree-14 structure function for the cubic algebra with beta != 0,
// in y = N + u. Phi = kTerm * K + sum_k kCoefficients[k] * y^k, except that the
// linear coefficient is stored as its five top-level pieces: the printed
// grouping leaves their relative sign ambiguous.

inline constexpr std::string_view kTerm =
     "- 3 * 2^16 * beta^8 * (y + 1) * (1 + 2 * y) * (1 - 2 * y)^2";

// Index k holds the coefficient of y^k; index 1 is empty (see kLinearPieces).
inline constexpr std::array<std::string_view, 15> kCoefficients{
     "64 * alpha^2 * (beta^3 + 4 * beta * delta)^2 * (33 * beta^4 - 56 * beta^2 * delta + 16 * delta^2) + "
     "a^2 * (beta^2 + 4 * delta) * (865 * beta^10 - 460 * beta^8 * delta + 1568 * beta^6 * delta^2 + 2176 "
     "* beta^4 * delta^3 - 4864 * beta^2 * delta^4 + 1024 * delta^5) - 16 * alpha * beta * (beta^2 + 4 * "
     "delta) * (a * (125 * beta^8 + 160 * beta^6 * delta + 416 * beta^4 * delta^2 - 1024 * beta^2 * "
     "delta^3 + 256 * delta^4) + 64 * beta^2 * gamma * (13 * beta^4 - 40 * beta^2 * delta + 16 * delta^2)) "
     "+ 128 * a * beta^2 * (3 * beta^2 - 4 * delta) * (gamma * (11 * beta^2 - 4 * delta) * (beta^2 + 4 * "
     "delta)^2 - 8 * beta * epsilon * (15 * beta^4 + 24 * beta^2 * delta - 16 * delta^2)) + 8192 * alpha * "
     "beta^4 * epsilon * (beta^4 - 24 * beta^2 * delta + 16 * delta^2) - 8 * beta^4 * (125 * beta^8 * mu - "
     "352 * beta^7 * nu + 16 * beta^6 * (33 * delta * mu + 104 * xi) - 128 * beta^5 * (13 * delta * nu + "
     "16 * zeta) + 32 * beta^4 * (112 * gamma^2 + delta * (7 * delta * mu + 160 * xi)) - 512 * beta^3 * "
     "(48 * gamma * epsilon + delta * (delta * nu - 48 * zeta)) + 256 * beta^2 * (48 * gamma^2 * delta + "
     "delta^3 * mu - 24 * delta^2 * xi - 128 * epsilon^2) + 2048 * beta * (16 * gamma * delta * epsilon + "
     "delta^3 * nu) - 256 * (32 * gamma^2 * delta^2 + 3 * delta^4 * mu))",
    "",
     "- 2 * (192 * alpha^2 * beta^2 * (beta^2 + 4 * delta) * (71 * beta^6 - 12 * beta^4 * delta - 176 * "
     "beta^2 * delta^2 - 64 * delta^3) + a^2 * (6929 * beta^12 + 23400 * beta^10 * delta + 26544 * beta^8 "
     "* delta^2 + 40704 * beta^6 * delta^3 - 26880 * beta^4 * delta^4 - 55296 * beta^2 * delta^5 - 12288 * "
     "delta^6) - 16 * alpha * (a * (975 * beta^11 + 4260 * beta^9 * delta + 5088 * beta^7 * delta^2 - 4480 "
     "* beta^5 * delta^3 - 11520 * beta^3 * delta^4 - 3072 * beta * delta^5) + 64 * beta^3 * (3 * gamma * "
     "(beta^2 - 4 * delta) * (17 * beta^4 + 40 * beta^2 * delta + 16 * delta^2) + 8 * beta * epsilon * (7 "
     "* beta^4 + 72 * beta^2 * delta + 48 * delta^2))) + 384 * a * beta^2 * (gamma * (beta^2 + 4 * delta) "
     "* (71 * beta^6 - 12 * beta^4 * delta - 176 * beta^2 * delta^2 - 64 * delta^3) + 8 * beta * epsilon * "
     "(- 49 * beta^6 + 28 * beta^4 * delta + 144 * beta^2 * delta^2 + 64 * delta^3)) - 8 * beta^4 * (975 * "
     "beta^8 * mu - 2272 * beta^7 * nu + 48 * beta^6 * (71 * delta * mu + 136 * xi) + 128 * beta^5 * (112 "
     "* zeta - 51 * delta * nu) + 32 * beta^4 * (496 * gamma^2 + delta * (57 * delta * mu + 160 * xi)) - "
     "512 * beta^3 * (144 * gamma * epsilon - delta * (7 * delta * nu + 144 * zeta)) + 256 * beta^2 * (144 "
     "* gamma^2 * delta - 7 * delta^3 * mu - 72 * delta^2 * xi + 384 * epsilon^2) + 6144 * beta * delta * "
     "(delta^2 * nu - 16 * gamma * epsilon) + 768 * (32 * gamma^2 * delta^2 - 3 * delta^4 * mu)))",
     "8 * beta^2 * (384 * alpha^2 * beta^2 * (beta^2 + 4 * delta) * (17 * beta^4 + 32 * beta^2 * delta - "
     "16 * delta^2) + a^2 * (1661 * beta^10 + 7404 * beta^8 * delta + 20384 * beta^6 * delta^2 + 43904 * "
     "beta^4 * delta^3 + 26880 * beta^2 * delta^4 - 9216 * delta^5) - 8 * alpha * (a * (617 * beta^9 + "
     "4080 * beta^7 * delta + 10976 * beta^5 * delta^2 + 8960 * beta^3 * delta^3 - 3840 * beta * delta^4) "
     "+ 64 * beta^3 * (75 * beta^4 * gamma - 112 * beta^3 * epsilon + 168 * beta^2 * gamma * delta + 192 * "
     "beta * delta * epsilon - 144 * gamma * delta^2)) + 256 * a * beta^2 * (51 * beta^6 * gamma - 214 * "
     "beta^5 * epsilon + 300 * beta^4 * gamma * delta - 336 * beta^3 * delta * epsilon + 336 * beta^2 * "
     "gamma * delta^2 + 288 * beta * delta^2 * epsilon - 192 * gamma * delta^3) + 4 * beta^2 * (- 617 * "
     "beta^8 * mu + 2176 * beta^7 * nu - 192 * beta^6 * (17 * delta * mu + 50 * xi) + 128 * beta^5 * (75 * "
     "delta * nu + 224 * zeta) + 32 * beta^4 * (96 * gamma^2 - 193 * delta^2 * mu - 576 * delta * xi) + "
     "1024 * beta^3 * (24 * gamma * epsilon + 7 * delta^2 * nu - 24 * delta * zeta) - 512 * beta^2 * delta "
     "* (24 * gamma^2 + 7 * delta^2 * mu - 12 * delta * xi) - 2048 * beta * delta^3 * nu + 768 * delta^4 * "
     "mu))",
     "32 * beta^2 * (768 * alpha^2 * (5 * beta^8 + 7 * beta^6 * delta - 24 * beta^4 * delta^2 - 16 * "
     "beta^2 * delta^3) + a^2 * (2749 * beta^10 + 8766 * beta^8 * delta + 12352 * beta^6 * delta^2 + 4672 "
     "* beta^4 * delta^3 - 11520 * beta^2 * delta^4 - 4608 * delta^5) - 4 * alpha * (a * (1461 * beta^9 + "
     "4800 * beta^7 * delta + 2336 * beta^5 * delta^2 - 7680 * beta^3 * delta^3 - 3840 * beta * delta^4) + "
     "192 * beta^3 * (32 * beta * epsilon * (beta^2 + 2 * delta) + gamma * (7 * beta^4 - 48 * beta^2 * "
     "delta - 48 * delta^2))) + 256 * a * beta^2 * (30 * beta^6 * gamma - 53 * beta^5 * epsilon + 42 * "
     "beta^4 * gamma * delta + 144 * beta^3 * delta * epsilon - 144 * beta^2 * gamma * delta^2 + 144 * "
     "beta * delta^2 * epsilon - 96 * gamma * delta^3) - 2 * beta^2 * (1461 * beta^8 * mu - 2560 * beta^7 "
     "* nu + 384 * beta^6 * (10 * delta * mu + 7 * xi) + 384 * beta^5 * (64 * zeta - 7 * delta * nu) + 32 "
     "* beta^4 * (320 * gamma^2 + delta * (31 * delta * mu - 256 * xi)) - 6144 * beta^3 * (4 * gamma * "
     "epsilon - delta * (delta * nu + 4 * zeta)) - 3072 * beta^2 * delta * (delta * (delta * mu + 2 * xi) "
     "- 4 * gamma^2) + 2048 * beta * delta^3 * nu - 768 * delta^4 * mu))",
     "- 48 * beta^4 * (128 * alpha^2 * (39 * beta^6 + 136 * beta^4 * delta + 48 * beta^2 * delta^2) + a^2 "
     "* (1559 * beta^8 + 7056 * beta^6 * delta + 18720 * beta^4 * delta^2 + 21760 * beta^2 * delta^3 + "
     "3840 * delta^4) - 32 * alpha * (a * (147 * beta^7 + 780 * beta^5 * delta + 1360 * beta^3 * delta^2 + "
     "320 * beta * delta^3) + 32 * beta^3 * (17 * beta^2 * gamma - 8 * beta * epsilon + 12 * gamma * "
     "delta)) + 256 * a * beta^2 * (39 * beta^4 * gamma - 68 * beta^3 * epsilon + 136 * beta^2 * gamma * "
     "delta - 48 * beta * delta * epsilon + 48 * gamma * delta^2) - 16 * beta^2 * (147 * beta^6 * mu - 416 "
     "* beta^5 * nu + 16 * beta^4 * (39 * delta * mu + 68 * xi) - 64 * beta^3 * (17 * delta * nu + 16 * "
     "zeta) + 16 * beta^2 * (- 16 * gamma^2 + 51 * delta^2 * mu + 32 * delta * xi) - 256 * beta * delta^2 "
     "* nu + 128 * delta^3 * mu))",
     "- 32 * beta^4 * (128 * alpha^2 * (51 * beta^6 - 56 * beta^4 * delta - 144 * beta^2 * delta^2) + a^2 "
     "* (8779 * beta^8 + 24720 * beta^6 * delta + 24480 * beta^4 * delta^2 - 8960 * beta^2 * delta^3 - "
     "11520 * delta^4) - 32 * alpha * (5 * a * (103 * beta^7 + 204 * beta^5 * delta - 112 * beta^3 * "
     "delta^2 - 192 * beta * delta^3) - 32 * beta^3 * (7 * beta^2 * gamma - 24 * beta * epsilon + 36 * "
     "gamma * delta)) + 256 * a * beta^2 * (51 * beta^4 * gamma + 28 * beta^3 * epsilon - 56 * beta^2 * "
     "gamma * delta + 144 * beta * delta * epsilon - 144 * gamma * delta^2) - 16 * beta^2 * (515 * beta^6 "
     "* mu - 544 * beta^5 * nu + 16 * beta^4 * (51 * delta * mu - 28 * xi) + 64 * beta^3 * (7 * delta * nu "
     "+ 48 * zeta) + 48 * beta^2 * (16 * gamma^2 - 7 * delta^2 * mu - 32 * delta * xi) + 768 * beta * "
     "delta^2 * nu - 384 * delta^3 * mu))",
     "2304 * beta^6 * (64 * alpha^2 * (3 * beta^4 + 4 * beta^2 * delta) + a^2 * (91 * beta^6 + 396 * "
     "beta^4 * delta + 720 * beta^2 * delta^2 + 320 * delta^3) - 8 * alpha * (a * (33 * beta^5 + 120 * "
     "beta^3 * delta + 80 * beta * delta^2) + 32 * beta^3 * gamma) + 128 * a * beta^2 * (3 * beta^2 * "
     "gamma - 2 * beta * epsilon + 4 * gamma * delta) - 4 * beta^2 * (33 * beta^4 * mu - 64 * beta^3 * nu "
     "+ 32 * beta^2 * (3 * delta * mu + 2 * xi) - 64 * beta * delta * nu + 48 * delta^2 * mu))",
     "256 * beta^6 * (192 * alpha^2 * (beta^4 - 8 * beta^2 * delta) + a^2 * (1849 * beta^6 + 3888 * beta^4 "
     "* delta + 720 * beta^2 * delta^2 - 1920 * delta^3) - 96 * alpha * (a * (27 * beta^5 + 10 * beta^3 * "
     "delta - 40 * beta * delta^2) - 16 * beta^3 * gamma) + 384 * a * beta^2 * (beta^2 * gamma + 4 * beta "
     "* epsilon - 8 * gamma * delta) - 16 * beta^2 * (81 * beta^4 * mu - 16 * beta^3 * nu + 24 * beta^2 * "
     "(delta * mu - 4 * xi) + 96 * beta * delta * nu - 72 * delta^2 * mu))",
     "- 256 * beta^8 * (960 * alpha^2 * beta^2 + a^2 * (1261 * beta^4 + 4440 * beta^2 * delta + 3600 * "
     "delta^2) - 80 * alpha * a * beta * (37 * beta^2 + 60 * delta) + 1920 * a * beta^2 * gamma - 40 * "
     "beta^2 * (37 * beta^2 * mu - 32 * beta * nu + 48 * delta * mu))",
     "- 512 * beta^8 * (- 192 * alpha^2 * beta^2 + a^2 * (775 * beta^4 + 648 * beta^2 * delta - 720 * "
     "delta^2) + 48 * alpha * a * beta * (20 * delta - 9 * beta^2) - 384 * a * beta^2 * gamma - 8 * beta^2 "
     "* (27 * beta^2 * mu + 32 * beta * nu - 48 * delta * mu))",
     "3 * 2^11 * beta^10 * (a * (47 * a * beta^2 - 56 * alpha * beta + 84 * a * delta) - 28 * mu * beta^2)",
     "2^14 * beta^10 * (a * (6 * alpha * beta + 7 * a * beta^2 - 9 * a * delta) + 3 * mu * beta^2)",
     "- 3^3 * 2^12 * a^2 * beta^12",
     "3 * 2^13 * a^2 * beta^12",
};

inline constexpr std::array<std::string_view, 5> kLinearPieces{
     "- 192 * alpha^2 * (beta^3 + 4 * beta * delta)^2 * (21 * beta^4 + 8 * beta^2 * delta - 48 * delta^2)",
     "- a^2 * (beta^2 + 4 * delta) * (915 * beta^10 + 300 * beta^8 * delta + 5728 * beta^6 * delta^2 + "
     "11136 * beta^4 * delta^3 - 2304 * beta^2 * delta^4 - 9216 * delta^5)",
     "16 * alpha * beta * ((beta^2 + 4 * delta) * (a * (165 * beta^8 + 600 * beta^6 * delta + 1856 * "
     "beta^4 * delta^2 - 384 * beta^2 * delta^3 - 2304 * delta^4) + 192 * beta^2 * gamma * (11 * beta^4 - "
     "48 * delta^2)) - 512 * beta^3 * epsilon * (11 * beta^4 - 24 * beta^2 * delta - 144 * delta^2))",
     "128 * a * beta^2 * (8 * beta * epsilon * (65 * beta^6 + 132 * beta^4 * delta - 144 * beta^2 * "
     "delta^2 - 576 * delta^3) - 3 * gamma * (beta^2 + 4 * delta)^2 * (21 * beta^4 + 8 * beta^2 * delta - "
     "48 * delta^2))",
     "8 * beta^4 * (165 * beta^8 * mu - 672 * beta^7 * nu + 48 * beta^6 * (21 * delta * mu + 88 * xi) - "
     "1408 * beta^5 * (3 * delta * nu + 16 * zeta) - 32 * beta^4 * (48 * gamma^2 - delta * (67 * delta * "
     "mu + 480 * xi)) - 512 * beta^3 * (48 * gamma * epsilon + delta * (11 * delta * nu - 48 * zeta)) + "
     "256 * beta^2 * (48 * gamma^2 * delta + 11 * delta^3 * mu - 24 * delta^2 * xi + 1152 * epsilon^2) + "
     "2048 * beta * delta * (delta^2 * nu - 144 * gamma * epsilon) + 768 * (96 * gamma^2 * delta^2 - "
     "delta^4 * mu))",
};

}  // namespace hchain::oscillator::reference
