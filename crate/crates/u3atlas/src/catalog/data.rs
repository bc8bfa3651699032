//! Static catalog data: for each series, the parameter tuples of all
//! instances of order below 2000 together with their GAP SmallGroups
//! identifiers (where known). The identifiers are reference metadata; the
//! engine never computes them.

/// Id type alias: [order, index] in the SmallGroups library.
pub type Id = [u64; 2];

/// Delta(3n^2): n -> identifier.
pub const DELTA3N2: &[(u32, Id)] = &[
    (2, [12, 3]),
    (3, [27, 3]),
    (4, [48, 3]),
    (5, [75, 2]),
    (6, [108, 22]),
    (7, [147, 5]),
    (8, [192, 3]),
    (9, [243, 26]),
    (10, [300, 43]),
    (11, [363, 2]),
    (12, [432, 103]),
    (13, [507, 5]),
    (14, [588, 60]),
    (15, [675, 12]),
    (16, [768, 1083477]),
    (17, [867, 2]),
    (18, [972, 122]),
    (19, [1083, 5]),
    (20, [1200, 384]),
    (21, [1323, 43]),
    (22, [1452, 34]),
    (23, [1587, 2]),
    (24, [1728, 1291]),
    (25, [1875, 16]),
];

/// Delta(6n^2): n -> identifier.
pub const DELTA6N2: &[(u32, Id)] = &[
    (2, [24, 12]),
    (3, [54, 8]),
    (4, [96, 64]),
    (5, [150, 5]),
    (6, [216, 95]),
    (7, [294, 7]),
    (8, [384, 568]),
    (9, [486, 61]),
    (10, [600, 179]),
    (11, [726, 5]),
    (12, [864, 701]),
    (13, [1014, 7]),
    (14, [1176, 243]),
    (15, [1350, 46]),
    (16, [1536, 408544632]),
    (17, [1734, 5]),
    (18, [1944, 849]),
];

/// D_{3l,l}^{(1)}: l -> identifier.
pub const D3LL: &[(u32, Id)] = &[(3, [162, 14]), (6, [648, 259]), (9, [1458, 659])];

/// T_r^{(k)}(m): (r, k, m) -> identifier.
pub const T_GROUPS: &[(u32, u32, u32, Id)] = &[
    (7, 2, 2, [63, 1]),
    (7, 2, 3, [189, 1]),
    (7, 2, 4, [567, 1]),
    (7, 2, 5, [1701, 68]),
    (13, 3, 2, [117, 1]),
    (13, 3, 3, [351, 1]),
    (13, 3, 4, [1053, 16]),
    (19, 7, 2, [171, 1]),
    (19, 7, 3, [513, 1]),
    (19, 7, 4, [1539, 16]),
    (31, 5, 2, [279, 1]),
    (31, 5, 3, [837, 1]),
    (37, 10, 2, [333, 1]),
    (37, 10, 3, [999, 1]),
    (43, 6, 2, [387, 1]),
    (43, 6, 3, [1161, 6]),
    (49, 18, 2, [441, 1]),
    (49, 18, 3, [1323, 1]),
    (61, 13, 2, [549, 1]),
    (61, 13, 3, [1647, 6]),
    (67, 29, 2, [603, 1]),
    (67, 29, 3, [1809, 6]),
    (73, 8, 2, [657, 1]),
    (73, 8, 3, [1971, 6]),
    (79, 23, 2, [711, 1]),
    (91, 9, 2, [819, 4]),
    (91, 16, 2, [819, 3]),
    (97, 35, 2, [873, 1]),
    (103, 46, 2, [927, 1]),
    (109, 45, 2, [981, 1]),
    (127, 19, 2, [1143, 1]),
    (133, 11, 2, [1197, 3]),
    (133, 30, 2, [1197, 4]),
    (139, 42, 2, [1251, 1]),
    (151, 32, 2, [1359, 1]),
    (157, 12, 2, [1413, 1]),
    (163, 58, 2, [1467, 1]),
    (169, 22, 2, [1521, 1]),
    (181, 48, 2, [1629, 1]),
    (193, 84, 2, [1737, 1]),
    (199, 92, 2, [1791, 1]),
    (211, 14, 2, [1899, 1]),
    (217, 25, 2, [1953, 3]),
    (217, 67, 2, [1953, 4]),
];

/// Delta(3n^2, m): (n, m) -> identifier.
pub const DELTA3N2M: &[(u32, u32, Id)] = &[
    (2, 2, [36, 3]),
    (2, 3, [108, 3]),
    (2, 4, [324, 3]),
    (2, 5, [972, 3]),
    (4, 2, [144, 3]),
    (4, 3, [432, 3]),
    (4, 4, [1296, 3]),
    (5, 2, [225, 3]),
    (5, 3, [675, 5]),
    (7, 2, [441, 7]),
    (7, 3, [1323, 14]),
    (8, 2, [576, 3]),
    (8, 3, [1728, 3]),
    (10, 2, [900, 66]),
    (11, 2, [1089, 3]),
    (13, 2, [1521, 7]),
    (14, 2, [1764, 91]),
];

/// S4(j): j -> identifier.
pub const S4J: &[(u32, Id)] = &[
    (2, [48, 30]),
    (3, [96, 65]),
    (4, [192, 186]),
    (5, [384, 581]),
    (6, [768, 1085351]),
    (7, [1536, 408544687]),
];

/// Delta(6n^2, j): (n, j) -> identifier.
pub const DELTA6N2J: &[(u32, u32, Id)] = &[
    (3, 2, [108, 11]),
    (3, 3, [216, 17]),
    (3, 4, [432, 33]),
    (3, 5, [864, 69]),
    (3, 6, [1728, 185]),
    (4, 2, [192, 182]),
    (4, 3, [384, 571]),
    (4, 4, [768, 1085333]),
    (4, 5, [1536, 408544678]),
    (5, 2, [300, 13]),
    (5, 3, [600, 45]),
    (5, 4, [1200, 183]),
    (6, 2, [432, 260]),
    (6, 3, [864, 703]),
    (6, 4, [1728, 2855]),
    (7, 2, [588, 16]),
    (7, 3, [1176, 57]),
    (8, 2, [768, 1085335]),
    (8, 3, [1536, 408544641]),
    (9, 2, [972, 64]),
    (9, 3, [1944, 70]),
    (10, 2, [1200, 682]),
    (11, 2, [1452, 11]),
    (12, 2, [1728, 2847]),
];

/// Delta'(6n^2, m, j): (n, m, j) -> identifier.
pub const DELTAPRIME: &[(u32, u32, u32, Id)] = &[
    (3, 2, 1, [162, 44]),
    (3, 2, 2, [324, 102]),
    (3, 2, 3, [648, 244]),
    (3, 2, 4, [1296, 647]),
    (3, 3, 1, [486, 164]),
    (3, 3, 2, [972, 348]),
    (3, 3, 3, [1944, 746]),
    (3, 4, 1, [1458, 1354]),
    (6, 2, 1, [648, 563]),
    (6, 2, 2, [1296, 2113]),
    (6, 3, 1, [1944, 2415]),
    (9, 2, 1, [1458, 1371]),
];

/// L_r^{(k)}(n, m): (r, k, n, m) -> identifier.
pub const LRKNM: &[(u32, u32, u32, u32, Id)] = &[
    (7, 2, 2, 2, [252, 11]),
    (7, 2, 2, 3, [756, 11]),
    (7, 2, 4, 2, [1008, 57]),
    (7, 2, 5, 2, [1575, 7]),
    (13, 3, 2, 2, [468, 14]),
    (13, 3, 2, 3, [1404, 14]),
    (13, 3, 4, 2, [1872, 60]),
    (19, 7, 2, 2, [684, 11]),
    (31, 5, 2, 2, [1116, 11]),
    (37, 10, 2, 2, [1332, 14]),
    (43, 6, 2, 2, [1548, 11]),
    (49, 18, 2, 2, [1764, 11]),
];

/// P_r^{(k)}(m), Q_r^{(k)}(m), Q_r^{(k)'}(m): (r, k, m) -> (P id, Q id, Q' id).
pub const PQQ: &[(u32, u32, u32, Id, Id, Id)] = &[
    (7, 2, 2, [189, 7], [189, 4], [189, 5]),
    (13, 3, 2, [351, 7], [351, 4], [351, 5]),
    (19, 7, 2, [513, 8], [513, 5], [513, 6]),
    (31, 5, 2, [837, 7], [837, 5], [837, 4]),
    (37, 10, 2, [999, 8], [999, 6], [999, 5]),
    (43, 6, 2, [1161, 12], [1161, 10], [1161, 11]),
    (49, 18, 2, [1323, 7], [1323, 4], [1323, 5]),
    (61, 13, 2, [1647, 17], [1647, 10], [1647, 11]),
    (67, 29, 2, [1809, 17], [1809, 10], [1809, 11]),
    (73, 8, 2, [1971, 17], [1971, 11], [1971, 10]),
    (7, 2, 3, [567, 7], [567, 4], [567, 5]),
    (13, 3, 3, [1053, 27], [1053, 26], [1053, 25]),
    (19, 7, 3, [1539, 27], [1539, 26], [1539, 25]),
    (7, 2, 4, [1701, 128], [1701, 127], [1701, 126]),
];

/// X(n): n -> identifier.
pub const XN: &[(u32, Id)] = &[
    (3, [27, 4]),
    (6, [108, 21]),
    (9, [243, 27]),
    (12, [432, 102]),
    (15, [675, 11]),
    (18, [972, 123]),
    (21, [1323, 42]),
    (24, [1728, 1290]),
];

/// S_r^{(k)}(m), S_r^{(k)'}(m), Y_r^{(k)}(m), V_r^{(k)}(m):
/// (r, k, m) -> (S id, S' id, Y id, V id).
pub const SSYV: &[(u32, u32, u32, Id, Id, Id, Id)] = &[
    (7, 2, 2, [567, 36], [567, 12], [567, 23], [567, 14]),
    (13, 3, 2, [1053, 47], [1053, 32], [1053, 29], [1053, 37]),
    (19, 7, 2, [1539, 47], [1539, 32], [1539, 29], [1539, 37]),
    (7, 2, 3, [1701, 240], [1701, 115], [1701, 261], [1701, 138]),
];

/// M_r^{(k)}, M_r^{(k)'}, J_r^{(k)}: (r, k) -> (M id, M' id, J id).
pub const MMJ: &[(u32, u32, Id, Id, Id)] = &[
    (7, 2, [756, 113], [756, 114], [756, 116]),
    (13, 3, [1404, 137], [1404, 138], [1404, 140]),
];

/// W(n, m): (n, m) -> identifier.
pub const WNM: &[(u32, u32, Id)] = &[
    (1, 2, [27, 4]),
    (1, 3, [81, 6]),
    (1, 4, [243, 24]),
    (1, 5, [729, 94]),
    (2, 2, [108, 19]),
    (2, 3, [324, 43]),
    (2, 4, [972, 117]),
    (4, 2, [432, 100]),
    (4, 3, [1296, 220]),
    (5, 2, [675, 9]),
    (7, 2, [1323, 40]),
    (8, 2, [1728, 1286]),
];

/// Z(n, m): (n, m) -> identifier.
pub const ZNM: &[(u32, u32, Id)] = &[
    (3, 2, [81, 14]),
    (6, 2, [324, 128]),
    (9, 2, [729, 397]),
    (12, 2, [1296, 1499]),
    (3, 3, [243, 50]),
    (6, 3, [972, 520]),
    (3, 4, [729, 393]),
];

/// Z'(n, m): (n, m) -> identifier.
pub const ZPNM: &[(u32, u32, Id)] = &[
    (3, 2, [81, 8]),
    (6, 2, [324, 49]),
    (9, 2, [729, 397]),
    (12, 2, [1296, 227]),
    (3, 3, [243, 20]),
    (6, 3, [972, 152]),
    (3, 4, [729, 64]),
];

/// Z''(n, m) for m >= 3: (n, m) -> identifier.
pub const ZPPNM: &[(u32, u32, Id)] =
    &[(3, 3, [243, 19]), (6, 3, [972, 153]), (3, 4, [729, 63])];

/// Z''(n, 2): SU(3) members. n -> (expected order, identifier if known,
/// SU(3) classification). Z''(9, 2) closes to Delta(3x9^2) of order 243,
/// smaller than the generic 3^2 n^2 of the series.
pub const ZPP2: &[(u32, u64, Option<Id>, &str)] = &[
    (3, 81, Some([81, 9]), "subgroup of SU(3): C_{9,3}^(1)"),
    (6, 324, None, "subgroup of SU(3): C_{18,6}^(1)"),
    (9, 243, None, "subgroup of SU(3): Delta(3x9^2)"),
    (12, 1296, None, "subgroup of SU(3): C_{36,12}^(1)"),
];

/// Z(n, m, j): (n, m, j) -> identifier. Z(9, 2, 1) is omitted: it is
/// isomorphic to Delta'(6x9^2, 2, 1), which the catalog already contains.
pub const ZNMJ: &[(u32, u32, u32, Id)] = &[
    (3, 2, 1, [162, 12]),
    (3, 2, 2, [324, 15]),
    (3, 2, 3, [648, 21]),
    (3, 2, 4, [1296, 37]),
    (3, 3, 1, [486, 28]),
    (3, 3, 2, [972, 31]),
    (3, 3, 3, [1944, 37]),
    (3, 4, 1, [1458, 618]),
    (6, 2, 1, [648, 260]),
    (6, 2, 2, [1296, 689]),
    (6, 3, 1, [1944, 833]),
];

/// Z'(n, m, j) with non-unit determinant: (n, m, j) -> identifier.
pub const ZPNMJ: &[(u32, u32, u32, Id)] = &[
    (3, 2, 2, [324, 17]),
    (3, 2, 3, [648, 23]),
    (3, 2, 4, [1296, 39]),
    (3, 3, 1, [486, 26]),
    (3, 3, 2, [972, 29]),
    (3, 3, 3, [1944, 35]),
    (3, 4, 1, [1458, 615]),
    (6, 2, 2, [1296, 688]),
    (6, 3, 1, [1944, 832]),
];

/// Z'(n, 2, 1): all generators have unit determinant, so these close inside
/// SU(3). n -> (identifier, SU(3) classification).
pub const ZPNMJ_SU3: &[(u32, Id, &str)] = &[
    (3, [162, 14], "subgroup of SU(3): D_{9,3}^(1)"),
    (6, [648, 259], "subgroup of SU(3): D_{18,6}^(1)"),
];

/// H(n, m, j): (n, m, j) -> identifier.
pub const HNMJ: &[(u32, u32, u32, Id)] = &[
    (3, 2, 1, [486, 125]),
    (3, 2, 2, [972, 309]),
    (3, 2, 3, [1944, 707]),
    (3, 3, 1, [1458, 1095]),
    (6, 2, 1, [1944, 2363]),
];

/// Y(m, j): (m, j) -> identifier.
pub const YMJ: &[(u32, u32, Id)] =
    &[(2, 1, [324, 45]), (3, 1, [972, 147]), (2, 2, [1296, 222])];

/// G(m, j): (m, j) -> identifier.
pub const GMJ: &[(u32, u32, Id)] = &[
    (1, 2, [324, 13]),
    (2, 2, [972, 309]),
    (1, 3, [648, 19]),
    (2, 3, [1944, 707]),
    (1, 4, [1296, 35]),
];

/// Y(j): j -> identifier.
pub const YJ: &[(u32, Id)] = &[(0, [81, 7]), (1, [324, 60]), (2, [1296, 237])];

/// Y~(j): j -> identifier.
pub const YTILDEJ: &[(u32, Id)] = &[(0, [162, 10]), (1, [648, 266])];

/// U(n, m, j): (n, m, j) -> identifier.
pub const UNMJ: &[(u32, u32, u32, Id)] = &[
    (3, 2, 2, [243, 55]),
    (3, 3, 2, [729, 86]),
    (3, 3, 3, [729, 284]),
    (6, 2, 2, [972, 550]),
];

/// L(m): m -> identifier.
pub const LM: &[(u32, Id)] = &[(2, [243, 16]), (3, [729, 62])];

/// V(j): j -> identifier.
pub const VJ: &[(u32, Id)] = &[(0, [81, 10]), (1, [324, 51]), (2, [1296, 226])];

/// D(j): j -> identifier.
pub const DJ: &[(u32, Id)] = &[(0, [243, 25]), (1, [972, 121])];

/// J(m): m -> identifier.
pub const JM: &[(u32, Id)] = &[(1, [243, 27]), (2, [729, 80])];

/// Xi(m, j): (m, j) -> (identifier, is SU(3) member).
/// Xi(1, 2) is Sigma(36x3), a subgroup of SU(3).
pub const XI: &[(u32, u32, Id, bool)] = &[
    (1, 2, [108, 15], true),
    (1, 3, [216, 25], false),
    (1, 4, [432, 57], false),
    (1, 5, [864, 194], false),
    (1, 6, [1728, 953], false),
    (2, 2, [324, 111], false),
    (2, 3, [648, 352], false),
    (2, 4, [1296, 1239], false),
    (3, 2, [972, 411], false),
    (3, 3, [1944, 1123], false),
];

/// Xi^(m, j): (m, j) -> identifier. The j = 2 instances are direct products
/// of Z_2 with smaller groups and are excluded.
pub const XIHAT: &[(u32, u32, Id)] = &[
    (1, 3, [432, 273]),
    (1, 4, [864, 737]),
    (1, 5, [1728, 2929]),
    (2, 3, [1296, 2203]),
];

/// Pi(m, j): (m, j) -> identifier.
pub const PI: &[(u32, u32, Id)] = &[
    (1, 2, [432, 239]),
    (1, 3, [864, 675]),
    (1, 4, [1728, 2785]),
    (2, 2, [1296, 1995]),
];

/// Theta(m): m -> (identifier, is SU(3) member).
/// Theta(1) is Sigma(72x3), a subgroup of SU(3).
pub const THETA: &[(u32, Id, bool)] =
    &[(1, [216, 88], true), (2, [648, 551], false), (3, [1944, 2333], false)];

/// Upsilon(m): m -> identifier.
pub const UPSILON: &[(u32, Id)] = &[(2, [648, 531]), (3, [1944, 2293])];

/// Upsilon'(m): m -> (identifier, is SU(3) member).
/// Upsilon'(2) is Sigma(216x3), a subgroup of SU(3).
pub const UPSILONPRIME: &[(u32, Id, bool)] =
    &[(2, [648, 532], true), (3, [1944, 2294], false)];

/// Omega(m): m -> identifier.
pub const OMEGA: &[(u32, Id)] = &[(1, [648, 533]), (2, [1944, 3448])];

/// Sporadic groups of order 729 (variants are the SmallGroups indices).
pub const SPORADIC729: &[u64] = &[96, 97, 98];

/// Sporadic groups of order 1458 (variants are the SmallGroups indices).
pub const SPORADIC1458: &[u64] = &[663, 666];

/// Sporadic groups of order 1701 (variants are the SmallGroups indices).
pub const SPORADIC1701: &[u64] = &[112, 130, 131];
