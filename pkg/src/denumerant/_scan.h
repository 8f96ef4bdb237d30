#ifndef DN_SCAN_H
#define DN_SCAN_H
#include <stdint.h>

#define DN_LANES 8

long long dn_residue_scan(
    const intptr_t *parts, intptr_t K, const uint32_t *init, const uint32_t *p, int P,
    uint32_t *d, const intptr_t *wf, const intptr_t *wn, const intptr_t *woff, intptr_t W,
    uint32_t *buf, intptr_t *bstart, intptr_t *pos, intptr_t *slot, long long T);

#endif
