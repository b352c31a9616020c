// Coefficients of the degree 4 and degree 6 ternary invariants in the
// integer slots psi = 6 * c / multiplicity, one slot per monomial in
// graded-lex order. Each entry lists its slot indices with repetition.

pub(crate) const S_TERMS: [([u8; 4], i64); 25] = [
    ([0, 3, 7, 9], 1),
    ([0, 3, 8, 8], -1),
    ([0, 4, 6, 9], -1),
    ([0, 4, 7, 8], 1),
    ([0, 5, 6, 8], 1),
    ([0, 5, 7, 7], -1),
    ([1, 1, 7, 9], -1),
    ([1, 1, 8, 8], 1),
    ([1, 2, 6, 9], 1),
    ([1, 2, 7, 8], -1),
    ([1, 3, 4, 9], 1),
    ([1, 3, 5, 8], -1),
    ([1, 4, 4, 8], -2),
    ([1, 4, 5, 7], 3),
    ([1, 5, 5, 6], -1),
    ([2, 2, 6, 8], -1),
    ([2, 2, 7, 7], 1),
    ([2, 3, 3, 9], -1),
    ([2, 3, 4, 8], 3),
    ([2, 3, 5, 7], -1),
    ([2, 4, 4, 7], -2),
    ([2, 4, 5, 6], 1),
    ([3, 3, 5, 5], 1),
    ([3, 4, 4, 5], -2),
    ([4, 4, 4, 4], 1),
];

pub(crate) const T_TERMS: [([u8; 6], i64); 103] = [
    ([0, 0, 6, 6, 9, 9], 1),
    ([0, 0, 6, 7, 8, 9], -6),
    ([0, 0, 6, 8, 8, 8], 4),
    ([0, 0, 7, 7, 7, 9], 4),
    ([0, 0, 7, 7, 8, 8], -3),
    ([0, 1, 3, 6, 9, 9], -6),
    ([0, 1, 3, 7, 8, 9], 18),
    ([0, 1, 3, 8, 8, 8], -12),
    ([0, 1, 4, 6, 8, 9], 12),
    ([0, 1, 4, 7, 7, 9], -24),
    ([0, 1, 4, 7, 8, 8], 12),
    ([0, 1, 5, 6, 7, 9], 6),
    ([0, 1, 5, 6, 8, 8], -12),
    ([0, 1, 5, 7, 7, 8], 6),
    ([0, 2, 3, 6, 8, 9], 6),
    ([0, 2, 3, 7, 7, 9], -12),
    ([0, 2, 3, 7, 8, 8], 6),
    ([0, 2, 4, 6, 7, 9], 12),
    ([0, 2, 4, 6, 8, 8], -24),
    ([0, 2, 4, 7, 7, 8], 12),
    ([0, 2, 5, 6, 6, 9], -6),
    ([0, 2, 5, 6, 7, 8], 18),
    ([0, 2, 5, 7, 7, 7], -12),
    ([0, 3, 3, 3, 9, 9], 4),
    ([0, 3, 3, 4, 8, 9], -24),
    ([0, 3, 3, 5, 7, 9], -12),
    ([0, 3, 3, 5, 8, 8], 24),
    ([0, 3, 4, 4, 7, 9], 36),
    ([0, 3, 4, 4, 8, 8], 12),
    ([0, 3, 4, 5, 6, 9], 12),
    ([0, 3, 4, 5, 7, 8], -60),
    ([0, 3, 5, 5, 6, 8], -12),
    ([0, 3, 5, 5, 7, 7], 24),
    ([0, 4, 4, 4, 6, 9], -20),
    ([0, 4, 4, 4, 7, 8], -12),
    ([0, 4, 4, 5, 6, 8], 36),
    ([0, 4, 4, 5, 7, 7], 12),
    ([0, 4, 5, 5, 6, 7], -24),
    ([0, 5, 5, 5, 6, 6], 4),
    ([1, 1, 1, 6, 9, 9], 4),
    ([1, 1, 1, 7, 8, 9], -12),
    ([1, 1, 1, 8, 8, 8], 8),
    ([1, 1, 2, 6, 8, 9], -12),
    ([1, 1, 2, 7, 7, 9], 24),
    ([1, 1, 2, 7, 8, 8], -12),
    ([1, 1, 3, 3, 9, 9], -3),
    ([1, 1, 3, 4, 8, 9], 12),
    ([1, 1, 3, 5, 7, 9], 6),
    ([1, 1, 3, 5, 8, 8], -12),
    ([1, 1, 4, 4, 7, 9], 12),
    ([1, 1, 4, 4, 8, 8], -24),
    ([1, 1, 4, 5, 6, 9], -24),
    ([1, 1, 4, 5, 7, 8], 36),
    ([1, 1, 5, 5, 6, 8], 24),
    ([1, 1, 5, 5, 7, 7], -27),
    ([1, 2, 2, 6, 7, 9], -12),
    ([1, 2, 2, 6, 8, 8], 24),
    ([1, 2, 2, 7, 7, 8], -12),
    ([1, 2, 3, 3, 8, 9], 6),
    ([1, 2, 3, 4, 7, 9], -60),
    ([1, 2, 3, 4, 8, 8], 36),
    ([1, 2, 3, 5, 6, 9], 18),
    ([1, 2, 3, 5, 7, 8], -6),
    ([1, 2, 4, 4, 6, 9], 36),
    ([1, 2, 4, 4, 7, 8], -12),
    ([1, 2, 4, 5, 6, 8], -60),
    ([1, 2, 4, 5, 7, 7], 36),
    ([1, 2, 5, 5, 6, 7], 6),
    ([1, 3, 3, 4, 5, 9], 12),
    ([1, 3, 3, 5, 5, 8], -12),
    ([1, 3, 4, 4, 4, 9], -12),
    ([1, 3, 4, 4, 5, 8], -12),
    ([1, 3, 4, 5, 5, 7], 36),
    ([1, 3, 5, 5, 5, 6], -12),
    ([1, 4, 4, 4, 4, 8], 24),
    ([1, 4, 4, 4, 5, 7], -36),
    ([1, 4, 4, 5, 5, 6], 12),
    ([2, 2, 2, 6, 6, 9], 4),
    ([2, 2, 2, 6, 7, 8], -12),
    ([2, 2, 2, 7, 7, 7], 8),
    ([2, 2, 3, 3, 7, 9], 24),
    ([2, 2, 3, 3, 8, 8], -27),
    ([2, 2, 3, 4, 6, 9], -24),
    ([2, 2, 3, 4, 7, 8], 36),
    ([2, 2, 3, 5, 6, 8], 6),
    ([2, 2, 3, 5, 7, 7], -12),
    ([2, 2, 4, 4, 6, 8], 12),
    ([2, 2, 4, 4, 7, 7], -24),
    ([2, 2, 4, 5, 6, 7], 12),
    ([2, 2, 5, 5, 6, 6], -3),
    ([2, 3, 3, 3, 5, 9], -12),
    ([2, 3, 3, 4, 4, 9], 12),
    ([2, 3, 3, 4, 5, 8], 36),
    ([2, 3, 3, 5, 5, 7], -12),
    ([2, 3, 4, 4, 4, 8], -36),
    ([2, 3, 4, 4, 5, 7], -12),
    ([2, 3, 4, 5, 5, 6], 12),
    ([2, 4, 4, 4, 4, 7], 24),
    ([2, 4, 4, 4, 5, 6], -12),
    ([3, 3, 3, 5, 5, 5], 8),
    ([3, 3, 4, 4, 5, 5], -24),
    ([3, 4, 4, 4, 4, 5], 24),
    ([4, 4, 4, 4, 4, 4], -8),
];
