/* Modular residue scan used by the compiled kernels; see _kernels_py.residue_scan. */
#include <string.h>
#include "_scan.h"

/* a = (a + b) mod p in every lane; residues are below p < 2**31 */
static inline void dn_addmod(uint32_t *restrict a, const uint32_t *restrict b,
                             const uint32_t *restrict p) {
    for (int q = 0; q < DN_LANES; q++) {
        uint32_t x = a[q] + b[q];
        uint32_t y = x - p[q];
        a[q] = y < x ? y : x;
    }
}

/* see _kernels_py.residue_scan; lane-interleaved tables, row stride DN_LANES */
long long dn_residue_scan(
    const intptr_t *parts, intptr_t K, const uint32_t *init, const uint32_t *p, int P,
    uint32_t *d, const intptr_t *wf, const intptr_t *wn, const intptr_t *woff, intptr_t W,
    uint32_t *buf, intptr_t *bstart, intptr_t *pos, intptr_t *slot, long long T)
{
    uint32_t v[DN_LANES], s[DN_LANES], pl[DN_LANES];
    memcpy(pl, p, sizeof pl);  /* a private copy cannot alias the tables */
    for (long long t = 0; t <= T; t++) {
        for (int q = 0; q < DN_LANES; q++) {
            v[q] = t == 0 ? init[q] : 0;
            s[q] = 0;
        }
        for (intptr_t k = 0; k < K; k++) {
            uint32_t *row = buf + (bstart[k] + pos[k]) * DN_LANES;
            dn_addmod(v, row, pl);
            memcpy(row, v, sizeof v);
            if (++pos[k] == parts[k]) pos[k] = 0;
        }
        for (intptr_t w = 0; w < W; w++) {
            intptr_t n = wn[w];
            uint32_t *row = d + (woff[w] + slot[w] * n) * DN_LANES;
            dn_addmod(s, row, pl);
            for (intptr_t j = 0; j + 1 < n; j++)
                dn_addmod(row + j * DN_LANES, row + (j + 1) * DN_LANES, pl);
            if (++slot[w] == wf[w]) slot[w] = 0;
        }
        for (int q = 0; q < P; q++)
            if (s[q] != v[q]) return t;
    }
    return -1;
}
