// SPDX-License-Identifier: Apache-2.0
// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#include "kernels_internal.hpp"
#include "uavirs/kernels.hpp"

namespace uavirs::kernels {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline __m256i mulhi_epu32(__m256i a, __m256i b) {
    __m256i even = _mm256_mul_epu32(a, b);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    return _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

inline __m256d poly_fma(__m256d x, __m256d c, __m256d acc) { return _mm256_fmadd_pd(acc, x, c); }

// fdlibm-style log for positive normal inputs.
__m256d log_pd(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
    __m256d dk = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(_mm256_srli_epi64(bits, 52), magic)),
        splat(4503599627370496.0 + 1023.0));
    __m256i mant = _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                                   _mm256_set1_epi64x(0x3FF0000000000000LL));
    __m256d m = _mm256_castsi256_pd(mant);
    __m256d big = _mm256_cmp_pd(m, splat(1.41421356237309504880), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), big);
    dk = _mm256_add_pd(dk, _mm256_and_pd(big, splat(1.0)));

    __m256d f = _mm256_sub_pd(m, splat(1.0));
    __m256d s = _mm256_div_pd(f, _mm256_add_pd(splat(2.0), f));
    __m256d z = _mm256_mul_pd(s, s);
    __m256d w = _mm256_mul_pd(z, z);
    __m256d t1 = poly_fma(w, splat(3.999999999940941908e-01),
                          poly_fma(w, splat(2.222219843214978396e-01), splat(1.531383769920937332e-01)));
    t1 = _mm256_mul_pd(w, t1);
    __m256d t2 = poly_fma(w, splat(2.857142874366239149e-01),
                          poly_fma(w, splat(1.818357216161805012e-01), splat(1.479819860511658591e-01)));
    t2 = _mm256_mul_pd(z, poly_fma(w, splat(6.666666666666735130e-01), t2));
    __m256d r = _mm256_add_pd(t1, t2);
    __m256d hfsq = _mm256_mul_pd(splat(0.5), _mm256_mul_pd(f, f));
    __m256d inner = _mm256_fmadd_pd(s, _mm256_add_pd(hfsq, r), _mm256_mul_pd(dk, splat(1.90821492927058770002e-10)));
    __m256d tail = _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f);
    return _mm256_sub_pd(_mm256_mul_pd(dk, splat(6.93147180369123816490e-01)), tail);
}

// cos(2 pi u) for u in [0, 1), reduced exactly in units of turns.
__m256d cos_turns_pd(__m256d u) {
    const __m256d sign_mask = splat(-0.0);
    __m256d t = _mm256_sub_pd(u, _mm256_round_pd(u, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC));
    __m256d a = _mm256_andnot_pd(sign_mask, t);
    __m256d flip = _mm256_cmp_pd(a, splat(0.25), _CMP_GT_OQ);
    a = _mm256_blendv_pd(a, _mm256_sub_pd(splat(0.5), a), flip);
    __m256d use_sin = _mm256_cmp_pd(a, splat(0.125), _CMP_GT_OQ);
    a = _mm256_blendv_pd(a, _mm256_sub_pd(splat(0.25), a), use_sin);

    __m256d x = _mm256_mul_pd(a, splat(6.28318530717958647692));
    __m256d z = _mm256_mul_pd(x, x);

    __m256d w4 = _mm256_mul_pd(z, z);
    __m256d rc = _mm256_mul_pd(z, poly_fma(z, splat(4.16666666666666019037e-02),
                                           poly_fma(z, splat(-1.38888888888741095749e-03),
                                                    splat(2.48015872894767294178e-05))));
    __m256d rc2 = poly_fma(z, splat(-2.75573143513906633035e-07),
                           poly_fma(z, splat(2.08757232129817482790e-09), splat(-1.13596475577881948265e-11)));
    rc = _mm256_fmadd_pd(_mm256_mul_pd(w4, w4), rc2, rc);
    __m256d hz = _mm256_mul_pd(splat(0.5), z);
    __m256d w = _mm256_sub_pd(splat(1.0), hz);
    __m256d cosv = _mm256_add_pd(
        w, _mm256_fmadd_pd(z, rc, _mm256_sub_pd(_mm256_sub_pd(splat(1.0), w), hz)));

    __m256d rs = poly_fma(z, splat(8.33333333332248946124e-03),
                          poly_fma(z, splat(-1.98412698298579493134e-04),
                                   poly_fma(z, splat(2.75573137070700676789e-06),
                                            poly_fma(z, splat(-2.50507602534068634195e-08),
                                                     splat(1.58969099521155010221e-10)))));
    __m256d v = _mm256_mul_pd(z, x);
    __m256d sinv = _mm256_fmadd_pd(v, _mm256_fmadd_pd(z, rs, splat(-1.66666666666666324348e-01)), x);

    __m256d res = _mm256_blendv_pd(cosv, sinv, use_sin);
    return _mm256_xor_pd(res, _mm256_and_pd(flip, sign_mask));
}

void philox_fill_avx2(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                      std::size_t count, std::uint32_t* out) {
    const __m256i m0 = _mm256_set1_epi32(static_cast<int>(kMul0));
    const __m256i m1 = _mm256_set1_epi32(static_cast<int>(kMul1));
    const __m256i w0 = _mm256_set1_epi32(static_cast<int>(kWeyl0));
    const __m256i w1 = _mm256_set1_epi32(static_cast<int>(kWeyl1));
    const __m256i s0 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream)));
    const __m256i s1 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream >> 32)));
    const __m256i key0 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(seed)));
    const __m256i key1 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(seed >> 32)));

    std::size_t j = 0;
    for (; j + 8 <= count; j += 8) {
        alignas(32) std::uint32_t lo[8], hi[8];
        for (int l = 0; l < 8; ++l) {
            std::uint64_t c = counter + j + l;
            lo[l] = static_cast<std::uint32_t>(c);
            hi[l] = static_cast<std::uint32_t>(c >> 32);
        }
        __m256i x0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(lo));
        __m256i x1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(hi));
        __m256i x2 = s0, x3 = s1, k0 = key0, k1 = key1;
        for (int round = 0; round < 10; ++round) {
            __m256i hi0 = mulhi_epu32(x0, m0);
            __m256i lo0 = _mm256_mullo_epi32(x0, m0);
            __m256i hi1 = mulhi_epu32(x2, m1);
            __m256i lo1 = _mm256_mullo_epi32(x2, m1);
            x0 = _mm256_xor_si256(_mm256_xor_si256(hi1, x1), k0);
            x1 = lo1;
            x2 = _mm256_xor_si256(_mm256_xor_si256(hi0, x3), k1);
            x3 = lo0;
            k0 = _mm256_add_epi32(k0, w0);
            k1 = _mm256_add_epi32(k1, w1);
        }
        alignas(32) std::uint32_t words[4][8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(words[0]), x0);
        _mm256_store_si256(reinterpret_cast<__m256i*>(words[1]), x1);
        _mm256_store_si256(reinterpret_cast<__m256i*>(words[2]), x2);
        _mm256_store_si256(reinterpret_cast<__m256i*>(words[3]), x3);
        for (int l = 0; l < 8; ++l)
            for (int w = 0; w < 4; ++w) out[4 * (j + l) + w] = words[w][l];
    }
    if (j < count) detail::philox_fill_scalar(seed, stream, counter + j, count - j, out + 4 * j);
}

void rician_envelopes_avx2(const std::uint32_t* blocks, std::size_t count, double k, double* out) {
    const double los = __builtin_sqrt(k / (k + 1.0));
    const double nlos = __builtin_sqrt(1.0 / (k + 1.0));
    const __m256d los2 = splat(los * los);
    const __m256d cross = splat(2.0 * los * nlos);
    const __m256d nlos2 = splat(nlos * nlos);
    const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);

    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) {
        __m256i v0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(blocks + 4 * j));
        __m256i v1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(blocks + 4 * j + 8));
        __m256i a = _mm256_permute4x64_epi64(_mm256_unpacklo_epi64(v0, v1), 0xD8);
        __m256i b = _mm256_permute4x64_epi64(_mm256_unpackhi_epi64(v0, v1), 0xD8);
        __m256d u1 = _mm256_sub_pd(splat(2.0), _mm256_castsi256_pd(_mm256_or_si256(_mm256_srli_epi64(a, 12), one_bits)));
        __m256d u2 = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(_mm256_srli_epi64(b, 12), one_bits)), splat(1.0));
        __m256d r2 = _mm256_sub_pd(_mm256_setzero_pd(), log_pd(u1));
        __m256d c = cos_turns_pd(u2);
        __m256d e2 = _mm256_fmadd_pd(nlos2, r2, los2);
        e2 = _mm256_fmadd_pd(_mm256_mul_pd(cross, _mm256_sqrt_pd(r2)), c, e2);
        e2 = _mm256_max_pd(e2, _mm256_setzero_pd());
        _mm256_storeu_pd(out + j, _mm256_sqrt_pd(e2));
    }
    for (; j < count; ++j) out[j] = detail::rician_envelope_from_block(blocks + 4 * j, k);
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

CascadeSums cascade_sums_avx2(const double* a, const double* b, std::size_t n) {
    __m256d sc = _mm256_setzero_pd(), sa = _mm256_setzero_pd(), sb = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        sc = _mm256_fmadd_pd(va, vb, sc);
        sa = _mm256_fmadd_pd(va, va, sa);
        sb = _mm256_fmadd_pd(vb, vb, sb);
    }
    CascadeSums s{hsum(sc), hsum(sa), hsum(sb)};
    auto rest = detail::cascade_sums_scalar(a + i, b + i, n - i);
    s.cross += rest.cross;
    s.power_a += rest.power_a;
    s.power_b += rest.power_b;
    return s;
}

}  // namespace

const KernelTable* avx2_table() {
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    static const KernelTable table{"avx2", philox_fill_avx2, rician_envelopes_avx2, cascade_sums_avx2};
    return supported ? &table : nullptr;
}

}  // namespace uavirs::kernels
