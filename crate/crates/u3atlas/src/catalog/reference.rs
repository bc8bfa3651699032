//! Frozen reference fixtures for the parameter-enumeration routines.
//!
//! These lists are the published admissible-parameter sets for the
//! triplet-generator series. The functions in the parent module recompute
//! them from the defining congruences; tests assert exact agreement.

/// All admissible (r, k) pairs with r <= 217, sorted by (r, k).
/// r is a product of primes congruent to 1 mod 6, k solves
/// 1 + k + k^2 = 0 (mod r) with k <= (r - 1) / 2.
pub const RK_PAIRS: &[(u32, u32)] = &[
    (7, 2),
    (13, 3),
    (19, 7),
    (31, 5),
    (37, 10),
    (43, 6),
    (49, 18),
    (61, 13),
    (67, 29),
    (73, 8),
    (79, 23),
    (91, 9),
    (91, 16),
    (97, 35),
    (103, 46),
    (109, 45),
    (127, 19),
    (133, 11),
    (133, 30),
    (139, 42),
    (151, 32),
    (157, 12),
    (163, 58),
    (169, 22),
    (181, 48),
    (193, 84),
    (199, 92),
    (211, 14),
    (217, 25),
    (217, 67),
];

/// All admissible C_{n,l}^{(k)} parameter triples (r, k, l) with
/// 3 r l^2 < 2000, sorted by (r, k, l). Row format below: (r, k, l-range)
/// flattened. For r divisible by 3 the multiplier l must itself be a
/// multiple of 3.
pub const C_PARAMS: &[(u32, u32, u32)] = &[
    (3, 1, 3),
    (3, 1, 6),
    (3, 1, 9),
    (3, 1, 12),
    (7, 2, 1),
    (7, 2, 2),
    (7, 2, 3),
    (7, 2, 4),
    (7, 2, 5),
    (7, 2, 6),
    (7, 2, 7),
    (7, 2, 8),
    (7, 2, 9),
    (13, 3, 1),
    (13, 3, 2),
    (13, 3, 3),
    (13, 3, 4),
    (13, 3, 5),
    (13, 3, 6),
    (13, 3, 7),
    (19, 7, 1),
    (19, 7, 2),
    (19, 7, 3),
    (19, 7, 4),
    (19, 7, 5),
    (21, 4, 3),
    (31, 5, 1),
    (31, 5, 2),
    (31, 5, 3),
    (31, 5, 4),
    (37, 10, 1),
    (37, 10, 2),
    (37, 10, 3),
    (37, 10, 4),
    (39, 16, 3),
    (43, 6, 1),
    (43, 6, 2),
    (43, 6, 3),
    (49, 18, 1),
    (49, 18, 2),
    (49, 18, 3),
    (57, 7, 3),
    (61, 13, 1),
    (61, 13, 2),
    (61, 13, 3),
    (67, 29, 1),
    (67, 29, 2),
    (67, 29, 3),
    (73, 8, 1),
    (73, 8, 2),
    (73, 8, 3),
    (79, 23, 1),
    (79, 23, 2),
    (91, 9, 1),
    (91, 9, 2),
    (91, 16, 1),
    (91, 16, 2),
    (97, 35, 1),
    (97, 35, 2),
    (103, 46, 1),
    (103, 46, 2),
    (109, 45, 1),
    (109, 45, 2),
    (127, 19, 1),
    (127, 19, 2),
    (133, 11, 1),
    (133, 11, 2),
    (133, 30, 1),
    (133, 30, 2),
    (139, 42, 1),
    (139, 42, 2),
    (151, 32, 1),
    (151, 32, 2),
    (157, 12, 1),
    (157, 12, 2),
    (163, 58, 1),
    (163, 58, 2),
    (169, 22, 1),
    (181, 48, 1),
    (193, 84, 1),
    (199, 92, 1),
    (211, 14, 1),
    (217, 25, 1),
    (217, 67, 1),
    (223, 39, 1),
    (229, 94, 1),
    (241, 15, 1),
    (247, 68, 1),
    (247, 87, 1),
    (259, 100, 1),
    (259, 121, 1),
    (271, 28, 1),
    (277, 116, 1),
    (283, 44, 1),
    (301, 79, 1),
    (301, 135, 1),
    (307, 17, 1),
    (313, 98, 1),
    (331, 31, 1),
    (337, 128, 1),
    (343, 18, 1),
    (349, 122, 1),
    (361, 68, 1),
    (367, 83, 1),
    (373, 88, 1),
    (379, 51, 1),
    (397, 34, 1),
    (403, 87, 1),
    (403, 191, 1),
    (409, 53, 1),
    (421, 20, 1),
    (427, 74, 1),
    (427, 135, 1),
    (433, 198, 1),
    (439, 171, 1),
    (457, 133, 1),
    (463, 21, 1),
    (469, 37, 1),
    (469, 163, 1),
    (481, 100, 1),
    (481, 211, 1),
    (487, 232, 1),
    (499, 139, 1),
    (511, 81, 1),
    (511, 137, 1),
    (523, 60, 1),
    (541, 129, 1),
    (547, 40, 1),
    (553, 23, 1),
    (553, 102, 1),
    (559, 165, 1),
    (559, 178, 1),
    (571, 109, 1),
    (577, 213, 1),
    (589, 87, 1),
    (589, 273, 1),
    (601, 24, 1),
    (607, 210, 1),
    (613, 65, 1),
    (619, 252, 1),
    (631, 43, 1),
    (637, 165, 1),
    (637, 263, 1),
    (643, 177, 1),
    (661, 296, 1),
];
