//! The catalog: every finite subgroup of U(3) of order below 2000 that is
//! not a direct product with a nontrivial cyclic group, organized into
//! parameterized series.
//!
//! Each series carries a generator recipe (assembled from `genlib`), an
//! order formula, an expected irreducible-representation dimension profile
//! where a closed form exists, and GAP SmallGroups identifiers as reference
//! metadata. [`enumerate`] lists every instance below a given order bound,
//! [`build`] closes the generator set into a concrete [`GroupData`], and
//! [`verify_entry`] cross-checks the computed invariants against the
//! expectations.

pub mod data;
pub mod reference;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chardeg::{self, DegreeProfile};
use crate::engine::{closure, ClosureError, GroupData, MonomialClass};
use crate::cyclotomic::Cyclotomic;
use crate::genlib::{
    gen_b, gen_e, gen_em, gen_f, gen_g, gen_i, gen_iprime, gen_k, gen_l, gen_misc, gen_q, gen_t1,
    gen_t2, gen_x, gen_y, gen_zm, MiscGen,
};
use crate::mat3::Mat3;

use data::Id;

/// Element cap applied by [`build`]; no catalogued group comes close.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// Closed set of series tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[allow(missing_docs)]
pub enum Series {
    Delta3n2,
    Delta6n2,
    Cnl,
    D3ll,
    T,
    Delta3n2m,
    S4j,
    Delta6n2j,
    DeltaPrime,
    Lrknm,
    P,
    Q,
    Qprime,
    Xn,
    S,
    Sprime,
    Yrk,
    Vrk,
    M,
    Mprime,
    Jrk,
    Wnm,
    Znm,
    Zpnm,
    Zppnm,
    Znmj,
    Zpnmj,
    Hnmj,
    Ymj,
    Gmj,
    G1296_699,
    Yj,
    Ytildej,
    Unmj,
    Lm,
    G1701_102,
    Vj,
    Dj,
    Jm,
    Sporadic729,
    Sporadic972,
    Sporadic1458,
    Sporadic1701,
    Xi,
    XiHat,
    Pi,
    Theta,
    Upsilon,
    UpsilonPrime,
    Omega,
}

/// All series tags in catalog order.
pub const ALL_SERIES: &[Series] = &[
    Series::Delta3n2,
    Series::Delta6n2,
    Series::Cnl,
    Series::D3ll,
    Series::T,
    Series::Delta3n2m,
    Series::S4j,
    Series::Delta6n2j,
    Series::DeltaPrime,
    Series::Lrknm,
    Series::P,
    Series::Q,
    Series::Qprime,
    Series::Xn,
    Series::S,
    Series::Sprime,
    Series::Yrk,
    Series::Vrk,
    Series::M,
    Series::Mprime,
    Series::Jrk,
    Series::Wnm,
    Series::Znm,
    Series::Zpnm,
    Series::Zppnm,
    Series::Znmj,
    Series::Zpnmj,
    Series::Hnmj,
    Series::Ymj,
    Series::Gmj,
    Series::G1296_699,
    Series::Yj,
    Series::Ytildej,
    Series::Unmj,
    Series::Lm,
    Series::G1701_102,
    Series::Vj,
    Series::Dj,
    Series::Jm,
    Series::Sporadic729,
    Series::Sporadic972,
    Series::Sporadic1458,
    Series::Sporadic1701,
    Series::Xi,
    Series::XiHat,
    Series::Pi,
    Series::Theta,
    Series::Upsilon,
    Series::UpsilonPrime,
    Series::Omega,
];

impl Series {
    /// Canonical name used in spec strings and reports.
    pub fn name(self) -> &'static str {
        match self {
            Series::Delta3n2 => "Delta3n2",
            Series::Delta6n2 => "Delta6n2",
            Series::Cnl => "Cnl",
            Series::D3ll => "D3ll",
            Series::T => "T",
            Series::Delta3n2m => "Delta3n2m",
            Series::S4j => "S4j",
            Series::Delta6n2j => "Delta6n2j",
            Series::DeltaPrime => "DeltaPrime",
            Series::Lrknm => "Lrknm",
            Series::P => "P",
            Series::Q => "Q",
            Series::Qprime => "Qprime",
            Series::Xn => "Xn",
            Series::S => "S",
            Series::Sprime => "Sprime",
            Series::Yrk => "Yrk",
            Series::Vrk => "Vrk",
            Series::M => "M",
            Series::Mprime => "Mprime",
            Series::Jrk => "Jrk",
            Series::Wnm => "Wnm",
            Series::Znm => "Znm",
            Series::Zpnm => "Zpnm",
            Series::Zppnm => "Zppnm",
            Series::Znmj => "Znmj",
            Series::Zpnmj => "Zpnmj",
            Series::Hnmj => "Hnmj",
            Series::Ymj => "Ymj",
            Series::Gmj => "Gmj",
            Series::G1296_699 => "G1296_699",
            Series::Yj => "Yj",
            Series::Ytildej => "Ytildej",
            Series::Unmj => "Unmj",
            Series::Lm => "Lm",
            Series::G1701_102 => "G1701_102",
            Series::Vj => "Vj",
            Series::Dj => "Dj",
            Series::Jm => "Jm",
            Series::Sporadic729 => "Sporadic729",
            Series::Sporadic972 => "Sporadic972",
            Series::Sporadic1458 => "Sporadic1458",
            Series::Sporadic1701 => "Sporadic1701",
            Series::Xi => "Xi",
            Series::XiHat => "XiHat",
            Series::Pi => "Pi",
            Series::Theta => "Theta",
            Series::Upsilon => "Upsilon",
            Series::UpsilonPrime => "UpsilonPrime",
            Series::Omega => "Omega",
        }
    }

    /// Look a series up by its canonical name.
    pub fn from_name(name: &str) -> Option<Series> {
        ALL_SERIES.iter().copied().find(|s| s.name() == name)
    }

    /// True for the seven series whose members contain non-monomial matrices
    /// (and whose irreps include dimensions outside {1, 2, 3, 6}).
    pub fn is_nonmonomial(self) -> bool {
        matches!(
            self,
            Series::Xi
                | Series::XiHat
                | Series::Pi
                | Series::Theta
                | Series::Upsilon
                | Series::UpsilonPrime
                | Series::Omega
        )
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Named integer parameters of a series instance. Unused slots stay `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[allow(missing_docs)]
pub struct Params {
    pub r: Option<u32>,
    pub k: Option<u32>,
    pub n: Option<u32>,
    pub l: Option<u32>,
    pub m: Option<u32>,
    pub j: Option<u32>,
    pub variant: Option<u32>,
}

impl Params {
    fn pairs(&self) -> Vec<(&'static str, u32)> {
        let mut out = Vec::new();
        for (name, v) in [
            ("r", self.r),
            ("k", self.k),
            ("n", self.n),
            ("l", self.l),
            ("m", self.m),
            ("j", self.j),
            ("variant", self.variant),
        ] {
            if let Some(v) = v {
                out.push((name, v));
            }
        }
        out
    }
}

/// One series instance, e.g. `Delta6n2j(n=5,j=3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeriesSpec {
    /// Which series.
    pub series: Series,
    /// Its parameters.
    pub params: Params,
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.series.name())?;
        for (i, (name, v)) in self.params.pairs().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}={v}")?;
        }
        write!(f, ")")
    }
}

/// Error parsing a spec string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecParseError {
    /// The string does not have the shape `Name(key=value,...)`.
    #[error("malformed spec string: {0}")]
    Malformed(String),
    /// The series name is not in the closed tag set.
    #[error("unknown series name: {0}")]
    UnknownSeries(String),
    /// A parameter key is not one of r, k, n, l, m, j, variant.
    #[error("unknown parameter key: {0}")]
    UnknownKey(String),
    /// A parameter value is not a non-negative integer.
    #[error("invalid integer value for {key}: {value}")]
    BadValue {
        /// Offending key.
        key: String,
        /// Offending value text.
        value: String,
    },
}

impl FromStr for SeriesSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, rest) = match s.find('(') {
            Some(p) => {
                let rest = &s[p + 1..];
                let rest = rest
                    .strip_suffix(')')
                    .ok_or_else(|| SpecParseError::Malformed(s.to_string()))?;
                (&s[..p], rest)
            }
            None => (s, ""),
        };
        let series =
            Series::from_name(name).ok_or_else(|| SpecParseError::UnknownSeries(name.to_string()))?;
        let mut params = Params::default();
        for item in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| SpecParseError::Malformed(item.to_string()))?;
            let (key, value) = (key.trim(), value.trim());
            let v: u32 = value.parse().map_err(|_| SpecParseError::BadValue {
                key: key.to_string(),
                value: value.to_string(),
            })?;
            match key {
                "r" => params.r = Some(v),
                "k" => params.k = Some(v),
                "n" => params.n = Some(v),
                "l" => params.l = Some(v),
                "m" => params.m = Some(v),
                "j" => params.j = Some(v),
                "variant" => params.variant = Some(v),
                other => return Err(SpecParseError::UnknownKey(other.to_string())),
            }
        }
        Ok(SeriesSpec { series, params })
    }
}

/// A catalog row: a series instance plus its expected invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// The series instance.
    pub spec: SeriesSpec,
    /// Group order from the series formula.
    pub expected_order: u64,
    /// GAP SmallGroups identifier, where published.
    pub expected_id: Option<Id>,
    /// Whether the group lies inside SU(3).
    pub expected_su3: bool,
    /// Closed-form dimension profile, where one exists.
    pub expected_profile: Option<DegreeProfile>,
    /// Exception annotations.
    pub notes: String,
}

/// Error from [`build`].
#[derive(Debug, Error)]
pub enum BuildError {
    /// The spec fails a series precondition.
    #[error("invalid spec: {reason}")]
    InvalidSpec {
        /// What is wrong.
        reason: String,
    },
    /// The closure failed (cap exceeded or bad generator).
    #[error(transparent)]
    Closure(#[from] ClosureError),
}

fn invalid(reason: impl Into<String>) -> BuildError {
    BuildError::InvalidSpec { reason: reason.into() }
}

fn req(v: Option<u32>, name: &str, series: Series) -> Result<u32, BuildError> {
    v.ok_or_else(|| invalid(format!("{} requires parameter {name}", series.name())))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), BuildError> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

/// Decompose an admissible index r. Returns `Some(false)` when r is a
/// product of primes congruent to 1 mod 6 (with r >= 7), `Some(true)` when
/// r is 3 times such a product (the empty product giving r = 3), and `None`
/// otherwise.
fn r_admissible_case(r: u32) -> Option<bool> {
    if r == 0 {
        return None;
    }
    let (mut x, three) = if r % 3 == 0 { (r / 3, true) } else { (r, false) };
    if !three && r < 7 {
        return None;
    }
    let mut p = 2u32;
    while p * p <= x {
        if x % p == 0 {
            if p % 6 != 1 {
                return None;
            }
            while x % p == 0 {
                x /= p;
            }
        }
        p += 1;
    }
    if x > 1 && x % 6 != 1 {
        return None;
    }
    Some(three)
}

fn k_solutions(r: u32) -> Vec<u32> {
    (1..=(r - 1) / 2)
        .filter(|&k| {
            let k = u64::from(k);
            (1 + k + k * k) % u64::from(r) == 0
        })
        .collect()
}

/// All (r, k) with r <= `max_r`, r a product of primes congruent to 1 mod 6,
/// and k a solution of 1 + k + k^2 = 0 (mod r) with k <= (r - 1) / 2,
/// sorted by (r, k).
pub fn rk_pairs(max_r: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for r in 7..=max_r {
        if r_admissible_case(r) != Some(false) {
            continue;
        }
        for k in k_solutions(r) {
            out.push((r, k));
        }
    }
    out
}

/// All admissible C_{rl,l}^{(k)} parameter triples (r, k, l) with
/// 3 r l^2 < `max_order`, sorted by (r, k, l). When 3 divides r the
/// multiplier l must itself be a multiple of 3.
pub fn c_group_parameters(max_order: u64) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    let max_r = (max_order / 3) as u32;
    for r in 3..=max_r {
        let Some(three) = r_admissible_case(r) else {
            continue;
        };
        let ks = k_solutions(r);
        if ks.is_empty() {
            continue;
        }
        let step = if three { 3 } else { 1 };
        let mut l = step;
        while 3 * u64::from(r) * u64::from(l) * u64::from(l) < max_order {
            for &k in &ks {
                out.push((r, k, l));
            }
            l += step;
        }
    }
    out.sort_unstable();
    out
}

fn p3(m: u32) -> u64 {
    3u64.pow(m)
}

fn p2(j: u32) -> u64 {
    2u64.pow(j)
}

/// Drop zero counts, then append one dimension soaking up the difference
/// between the order and the sum of squares of the explicit part.
fn fill_profile(base: &[(u64, u64)], order: u64, fill_dim: u64) -> DegreeProfile {
    let mut pairs: Vec<(u64, u64)> = base.iter().copied().filter(|&(_, c)| c > 0).collect();
    let used: u64 = pairs.iter().map(|&(d, c)| d * d * c).sum();
    let rem = order
        .checked_sub(used)
        .expect("profile formula exceeds the group order");
    assert_eq!(rem % (fill_dim * fill_dim), 0, "fill dimension does not divide the remainder");
    let c = rem / (fill_dim * fill_dim);
    if c > 0 {
        pairs.push((fill_dim, c));
    }
    DegreeProfile::from_pairs(&pairs)
}

fn explicit_profile(pairs: &[(u64, u64)]) -> DegreeProfile {
    let pairs: Vec<(u64, u64)> = pairs.iter().copied().filter(|&(_, c)| c > 0).collect();
    DegreeProfile::from_pairs(&pairs)
}

/// Shared profile of the Z(n, m, j) and Z'(n, m, j) series: singlets,
/// doublets and triplets in closed form, sextets by the sum rule.
fn znmj_profile(n: u32, m: u32, j: u32) -> DegreeProfile {
    let n64 = u64::from(n);
    let order = p3(m) * p2(j) * n64 * n64;
    let s = p3(m - 1);
    fill_profile(
        &[(1, s * p2(j)), (2, s * p2(j - 1)), (3, (n64 - 1) * s * p2(j))],
        order,
        6,
    )
}

/// Shared profile of the Pi(m, j) series; Theta(m) uses it with j = 1.
fn pi_profile(m: u32, j: u32) -> DegreeProfile {
    let s = p3(m - 1);
    explicit_profile(&[
        (1, s * p2(j + 1)),
        (2, s * p2(j - 1)),
        (3, s * p2(j + 2)),
        (6, s * p2(j)),
        (8, s * p2(j - 1)),
    ])
}

/// Shared profile of the Upsilon and Upsilon' series (m >= 2); Omega(m)
/// uses it with m + 1.
fn upsilon_profile(m: u32) -> DegreeProfile {
    explicit_profile(&[
        (1, p3(m - 1)),
        (2, p3(m - 1)),
        (3, 7 * p3(m - 2)),
        (6, 2 * p3(m - 1)),
        (8, p3(m - 1)),
        (9, 2 * p3(m - 2)),
    ])
}

/// Closed-form dimension profile of a series instance, if one exists.
/// Returns `None` both for series without a published closed form and for
/// specs with missing or out-of-domain parameters.
pub fn expected_degree_profile(spec: &SeriesSpec) -> Option<DegreeProfile> {
    let p = &spec.params;
    let prof = match spec.series {
        Series::Delta3n2 => {
            let n = u64::from(p.n?);
            let s = if n % 3 == 0 { 9 } else { 3 };
            fill_profile(&[(1, s)], 3 * n * n, 3)
        }
        Series::Delta6n2 => {
            let n = u64::from(p.n?);
            if n % 3 == 0 {
                explicit_profile(&[(1, 2), (2, 4), (3, 2 * (n - 1)), (6, n * (n - 3) / 6)])
            } else {
                explicit_profile(&[
                    (1, 2),
                    (2, 1),
                    (3, 2 * (n - 1)),
                    (6, (n - 1) * (n - 2) / 6),
                ])
            }
        }
        Series::Cnl => {
            let (r, l) = (u64::from(p.r?), u64::from(p.l?));
            let s = if l % 3 == 0 { 9 } else { 3 };
            fill_profile(&[(1, s)], 3 * r * l * l, 3)
        }
        Series::D3ll => {
            let l = u64::from(p.l?);
            explicit_profile(&[(1, 6), (2, 3), (3, 6 * (l - 1)), (6, l * (l - 3) / 2 + 1)])
        }
        Series::T => {
            let (r, m) = (u64::from(p.r?), p.m?);
            fill_profile(&[(1, p3(m))], p3(m) * r, 3)
        }
        Series::Delta3n2m => {
            let (n, m) = (u64::from(p.n?), p.m?);
            fill_profile(&[(1, p3(m))], p3(m) * n * n, 3)
        }
        Series::S4j => {
            let j = p.j?;
            explicit_profile(&[(1, p2(j)), (2, p2(j - 1)), (3, p2(j))])
        }
        Series::Delta6n2j => {
            let (n, j) = (u64::from(p.n?), p.j?);
            let d = if n % 3 == 0 { p2(j + 1) } else { p2(j - 1) };
            fill_profile(&[(1, p2(j)), (2, d), (3, p2(j) * (n - 1))], 3 * p2(j) * n * n, 6)
        }
        Series::DeltaPrime => {
            let (n, m, j) = (u64::from(p.n?), p.m?, p.j?);
            let s = p3(m - 1);
            fill_profile(
                &[(1, s * p2(j)), (2, s * p2(j + 1)), (3, (n - 1) * s * p2(j))],
                p3(m) * p2(j) * n * n,
                6,
            )
        }
        Series::Lrknm => {
            let (r, n, m) = (u64::from(p.r?), u64::from(p.n?), p.m?);
            fill_profile(&[(1, p3(m))], p3(m) * r * n * n, 3)
        }
        Series::P | Series::Q | Series::Qprime => {
            let (r, m) = (u64::from(p.r?), p.m?);
            fill_profile(&[(1, p3(m))], p3(m + 1) * r, 3)
        }
        Series::Xn => {
            let n = u64::from(p.n?);
            fill_profile(&[(1, 9)], 3 * n * n, 3)
        }
        Series::S => {
            let (r, m) = (u64::from(p.r?), p.m?);
            fill_profile(&[(1, p3(m + 1))], p3(m + 2) * r, 3)
        }
        Series::Sprime | Series::Yrk => {
            let (r, m) = (u64::from(p.r?), p.m?);
            fill_profile(&[(1, p3(m))], p3(m + 2) * r, 3)
        }
        Series::Vrk => {
            let (r, m) = (u64::from(p.r?), p.m?);
            fill_profile(&[(1, 9)], p3(m + 2) * r, 3)
        }
        Series::M | Series::Mprime | Series::Jrk => {
            let r = u64::from(p.r?);
            fill_profile(&[(1, 9)], 108 * r, 3)
        }
        Series::Wnm => {
            let (n, m) = (u64::from(p.n?), p.m?);
            fill_profile(&[(1, p3(m))], p3(m + 1) * n * n, 3)
        }
        Series::Znm => {
            let (n, m) = (u64::from(p.n?), p.m?);
            fill_profile(&[(1, p3(m + 1))], p3(m) * n * n, 3)
        }
        Series::Zpnm => {
            let (n, m) = (u64::from(p.n?), p.m?);
            // Zpnm(9,2) is isomorphic to Znm(9,2) and inherits that group's
            // larger singlet count.
            let singlets = if (n, m) == (9, 2) { p3(m + 1) } else { p3(m) };
            fill_profile(&[(1, singlets)], p3(m) * n * n, 3)
        }
        Series::Zppnm => {
            let (n, m) = (u64::from(p.n?), p.m?);
            // Zppnm(9,2) collapses to a smaller group than the generic order
            // formula predicts; the singlet count 3^m applies throughout.
            let order = if (n, m) == (9, 2) { 243 } else { p3(m) * n * n };
            fill_profile(&[(1, p3(m))], order, 3)
        }
        Series::Znmj | Series::Zpnmj => znmj_profile(p.n?, p.m?, p.j?),
        Series::Hnmj => znmj_profile(p.n?, p.m? + 1, p.j?),
        Series::Ymj => {
            let (m, j) = (p.m?, p.j?);
            fill_profile(&[(1, p3(m + 1))], p3(m + 2) * p2(2 * j), 3)
        }
        Series::Gmj => znmj_profile(3, p.m? + 1, p.j?),
        Series::Yj | Series::Vj => {
            let j = p.j?;
            fill_profile(&[(1, 9)], 81 * p2(2 * j), 3)
        }
        Series::Ytildej => match p.j? {
            0 => explicit_profile(&[(1, 6), (2, 3), (3, 12), (6, 1)]),
            1 => explicit_profile(&[(1, 6), (2, 3), (3, 30), (6, 10)]),
            _ => return None,
        },
        Series::Unmj => {
            let (n, m, j) = (u64::from(p.n?), p.m?, p.j?);
            fill_profile(&[(1, p3(j + 1))], p3(m + 1) * n * n, 3)
        }
        Series::Lm => {
            let m = p.m?;
            fill_profile(&[(1, p3(m + 1))], p3(m + 3), 3)
        }
        Series::Dj => {
            let j = p.j?;
            fill_profile(&[(1, 9)], 243 * p2(2 * j), 3)
        }
        Series::Jm => {
            let m = p.m?;
            fill_profile(&[(1, p3(m + 1))], 81 * p3(m), 3)
        }
        Series::Sporadic729 => explicit_profile(&[(1, 9), (3, 80)]),
        Series::Sporadic1458 => explicit_profile(&[(1, 6), (2, 3), (3, 48), (6, 28)]),
        Series::Xi => {
            let (m, j) = (p.m?, p.j?);
            let s = p3(m - 1);
            explicit_profile(&[(1, s * p2(j)), (3, s * p2(j + 1)), (4, s * p2(j - 1))])
        }
        Series::XiHat => {
            let (m, j) = (p.m?, p.j?);
            let s = p3(m - 1);
            explicit_profile(&[(1, s * p2(j)), (3, s * p2(j + 1)), (4, s * p2(j - 1))]).doubled()
        }
        Series::Pi => pi_profile(p.m?, p.j?),
        Series::Theta => pi_profile(p.m?, 1),
        Series::Upsilon | Series::UpsilonPrime => upsilon_profile(p.m?),
        Series::Omega => upsilon_profile(p.m? + 1),
        Series::G1296_699
        | Series::G1701_102
        | Series::Sporadic972
        | Series::Sporadic1701 => return None,
    };
    Some(prof)
}

/// Generator set of a series instance.
fn generators(spec: &SeriesSpec) -> Result<Vec<Mat3>, BuildError> {
    let s = spec.series;
    let p = &spec.params;
    let zeta4 = Cyclotomic::root_of_unity(4, 1);
    let gens = match s {
        Series::Delta3n2 => {
            let n = req(p.n, "n", s)?;
            ensure(n >= 2, "Delta3n2 requires n >= 2")?;
            vec![gen_e(), gen_l(n)]
        }
        Series::Delta6n2 => {
            let n = req(p.n, "n", s)?;
            ensure(n >= 2, "Delta6n2 requires n >= 2")?;
            vec![gen_e(), gen_i(), gen_l(n)]
        }
        Series::Cnl => {
            let (r, k, l) = (req(p.r, "r", s)?, req(p.k, "k", s)?, req(p.l, "l", s)?);
            let three = r_admissible_case(r).ok_or_else(|| invalid("Cnl: inadmissible r"))?;
            ensure(l >= 1, "Cnl requires l >= 1")?;
            ensure(!three || l % 3 == 0, "Cnl with 3 | r requires 3 | l")?;
            ensure(
                k_solutions(r).contains(&k),
                "Cnl: k must solve 1 + k + k^2 = 0 (mod r) with k <= (r - 1) / 2",
            )?;
            let n = r * l;
            vec![gen_e(), gen_b(n, k), gen_g(n, r)]
        }
        Series::D3ll => {
            let l = req(p.l, "l", s)?;
            ensure(l % 3 == 0 && l >= 3, "D3ll requires 3 | l")?;
            vec![gen_e(), gen_i(), gen_b(3 * l, 1)]
        }
        Series::T => {
            let (r, k, m) = (req(p.r, "r", s)?, req(p.k, "k", s)?, req(p.m, "m", s)?);
            ensure(m >= 2, "T requires m >= 2")?;
            ensure(
                r_admissible_case(r) == Some(false) && k_solutions(r).contains(&k),
                "T: (r, k) must be an admissible pair",
            )?;
            vec![gen_b(r, k), gen_em(m)]
        }
        Series::Delta3n2m => {
            let (n, m) = (req(p.n, "n", s)?, req(p.m, "m", s)?);
            ensure(n >= 2 && n % 3 != 0, "Delta3n2m requires n >= 2 with 3 not dividing n")?;
            ensure(m >= 2, "Delta3n2m requires m >= 2")?;
            vec![gen_l(n), gen_em(m)]
        }
        Series::S4j => {
            let j = req(p.j, "j", s)?;
            ensure(j >= 2, "S4j requires j >= 2")?;
            vec![gen_e(), gen_l(2), gen_f(0, j).neg()]
        }
        Series::Delta6n2j => {
            let (n, j) = (req(p.n, "n", s)?, req(p.j, "j", s)?);
            ensure(n >= 3, "Delta6n2j requires n >= 3")?;
            ensure(j >= 2, "Delta6n2j requires j >= 2")?;
            vec![gen_e(), gen_l(n), gen_f(0, j).neg()]
        }
        Series::DeltaPrime => {
            let (n, m, j) = (req(p.n, "n", s)?, req(p.m, "m", s)?, req(p.j, "j", s)?);
            ensure(n % 3 == 0 && n >= 3, "DeltaPrime requires 3 | n")?;
            ensure(m >= 2 && j >= 1, "DeltaPrime requires m >= 2 and j >= 1")?;
            vec![gen_e(), gen_l(n), gen_f(m, j).neg()]
        }
        Series::Lrknm => {
            let (r, k) = (req(p.r, "r", s)?, req(p.k, "k", s)?);
            let (n, m) = (req(p.n, "n", s)?, req(p.m, "m", s)?);
            ensure(n >= 2 && n % 3 != 0, "Lrknm requires n >= 2 with 3 not dividing n")?;
            ensure(m >= 2, "Lrknm requires m >= 2")?;
            vec![gen_b(r, k), gen_l(n), gen_em(m)]
        }
        Series::P => {
            let (r, k, m) = (req(p.r, "r", s)?, req(p.k, "k", s)?, req(p.m, "m", s)?);
            ensure(m >= 2, "P requires m >= 2")?;
            vec![gen_b(r, k), gen_l(3), gen_zm(m - 1)]
        }
        Series::Q | Series::Qprime => {
            let (r, k, m) = (req(p.r, "r", s)?, req(p.k, "k", s)?, req(p.m, "m", s)?);
            ensure(m >= 2, "Q/Qprime requires m >= 2")?;
            let i = if s == Series::Q { 1 } else { 2 };
            vec![gen_b(r, k), gen_e(), gen_y(i, m)]
        }
        Series::Xn => {
            let n = req(p.n, "n", s)?;
            ensure(n % 3 == 0 && n >= 3, "Xn requires 3 | n")?;
            vec![gen_l(n), gen_zm(1)]
        }
        Series::S | Series::Sprime => {
            let (r, k, m) = (req(p.r, "r", s)?, req(p.k, "k", s)?, req(p.m, "m", s)?);
            ensure(m >= 2, "S/Sprime requires m >= 2")?;
            let i = if s == Series::S { 3 } else { 1 };
            vec![gen_b(r, k), gen_e(), gen_l(3), gen_x(i, m)]
        }
        Series::Yrk => {
            let (r, k, m) = (req(p.r, "r", s)?, req(p.k, "k", s)?, req(p.m, "m", s)?);
            ensure(m >= 2, "Yrk requires m >= 2")?;
            vec![gen_b(r, k), gen_e(), gen_x(1, m - 1), gen_x(3, m - 1)]
        }
        Series::Vrk => {
            let (r, k, m) = (req(p.r, "r", s)?, req(p.k, "k", s)?, req(p.m, "m", s)?);
            ensure(m >= 2, "Vrk requires m >= 2")?;
            vec![gen_b(r, k), gen_x(2, 2), gen_zm(1), gen_l(3u32.pow(m - 1))]
        }
        Series::M | Series::Mprime => {
            let (r, k) = (req(p.r, "r", s)?, req(p.k, "k", s)?);
            let i = if s == Series::M { 1 } else { 2 };
            vec![gen_b(r, k), gen_l(2), gen_e(), gen_y(i, 2)]
        }
        Series::Jrk => {
            let (r, k) = (req(p.r, "r", s)?, req(p.k, "k", s)?);
            vec![gen_b(r, k), gen_l(2), gen_l(3), gen_zm(1)]
        }
        Series::Wnm => {
            let (n, m) = (req(p.n, "n", s)?, req(p.m, "m", s)?);
            ensure(n >= 1 && n % 3 != 0, "Wnm requires 3 not dividing n")?;
            ensure(m >= 2, "Wnm requires m >= 2")?;
            vec![gen_e(), gen_l(n), gen_y(1, m)]
        }
        Series::Znm => {
            let (n, m) = (req(p.n, "n", s)?, req(p.m, "m", s)?);
            ensure(n % 3 == 0 && n >= 3, "Znm requires 3 | n")?;
            ensure(m >= 2, "Znm requires m >= 2")?;
            vec![gen_e(), gen_l(n), gen_y(1, m)]
        }
        Series::Zpnm | Series::Zppnm => {
            let (n, m) = (req(p.n, "n", s)?, req(p.m, "m", s)?);
            ensure(n % 3 == 0 && n >= 3, "Zpnm/Zppnm requires 3 | n")?;
            ensure(m >= 2, "Zpnm/Zppnm requires m >= 2")?;
            let i = if s == Series::Zpnm { 1 } else { 2 };
            vec![gen_e(), gen_l(n), gen_x(i, m)]
        }
        Series::Znmj | Series::Zpnmj => {
            let (n, m, j) = (req(p.n, "n", s)?, req(p.m, "m", s)?, req(p.j, "j", s)?);
            ensure(n % 3 == 0 && n >= 3, "Znmj/Zpnmj requires 3 | n")?;
            ensure(m >= 2 && j >= 1, "Znmj/Zpnmj requires m >= 2 and j >= 1")?;
            let i = if s == Series::Znmj { 1 } else { 2 };
            vec![gen_e(), gen_l(n), gen_x(i, m), gen_f(1, j).neg()]
        }
        Series::Hnmj => {
            let (n, m, j) = (req(p.n, "n", s)?, req(p.m, "m", s)?, req(p.j, "j", s)?);
            ensure(n % 3 == 0 && n >= 3, "Hnmj requires 3 | n")?;
            ensure(m >= 2 && j >= 1, "Hnmj requires m >= 2 and j >= 1")?;
            vec![gen_e(), gen_l(n), gen_x(1, 2), gen_f(m, j).neg()]
        }
        Series::Ymj => {
            let (m, j) = (req(p.m, "m", s)?, req(p.j, "j", s)?);
            ensure(m >= 2 && j >= 1, "Ymj requires m >= 2 and j >= 1")?;
            vec![gen_l(3), gen_l(2u32.pow(j)), gen_zm(m)]
        }
        Series::Gmj => {
            let (m, j) = (req(p.m, "m", s)?, req(p.j, "j", s)?);
            ensure(m >= 1 && j >= 2, "Gmj requires m >= 1 and j >= 2")?;
            vec![gen_e(), gen_f(m, j).neg(), gen_misc(MiscGen::Diag11Omega)]
        }
        Series::G1296_699 => {
            vec![gen_e(), gen_f(1, 2).neg(), gen_misc(MiscGen::Diag11Omega), gen_l(2)]
        }
        Series::Yj => {
            let j = req(p.j, "j", s)?;
            ensure(j <= 2, "Yj requires j <= 2")?;
            vec![gen_e(), gen_misc(MiscGen::XiDiag { j })]
        }
        Series::Ytildej => {
            let j = req(p.j, "j", s)?;
            ensure(j <= 1, "Ytildej requires j <= 1")?;
            vec![gen_e(), gen_misc(MiscGen::XiDiag { j }), gen_iprime()]
        }
        Series::Unmj => {
            let (n, m, j) = (req(p.n, "n", s)?, req(p.m, "m", s)?, req(p.j, "j", s)?);
            ensure(n % 3 == 0 && n >= 3, "Unmj requires 3 | n")?;
            ensure(m >= 2 && j >= 2 && j <= m, "Unmj requires m >= 2 and 2 <= j <= m")?;
            vec![
                gen_e(),
                gen_misc(MiscGen::NuDiag { n }),
                gen_misc(MiscGen::MuT1 { m, j }),
            ]
        }
        Series::Lm => {
            let m = req(p.m, "m", s)?;
            ensure(m >= 2, "Lm requires m >= 2")?;
            vec![gen_x(1, 2), gen_zm(m), gen_l(3)]
        }
        Series::G1701_102 => vec![gen_b(7, 2), gen_zm(2), gen_x(1, 2), gen_l(3)],
        Series::Vj => {
            let j = req(p.j, "j", s)?;
            ensure(j <= 2, "Vj requires j <= 2")?;
            vec![gen_zm(1), gen_x(2, 2), gen_l(2u32.pow(j))]
        }
        Series::Dj => {
            let j = req(p.j, "j", s)?;
            ensure(j <= 1, "Dj requires j <= 1")?;
            vec![gen_em(2), gen_l(2u32.pow(j)), gen_t1(2)]
        }
        Series::Jm => {
            let m = req(p.m, "m", s)?;
            ensure(m >= 1 && m <= 2, "Jm requires m in {1, 2}")?;
            vec![gen_zm(m), gen_l(9)]
        }
        Series::Sporadic729 => {
            let v = req(p.variant, "variant", s)?;
            let tag = match v {
                96 => MiscGen::J96,
                97 => MiscGen::J97,
                98 => MiscGen::J98,
                _ => return Err(invalid("Sporadic729 variant must be 96, 97 or 98")),
            };
            vec![gen_zm(1), gen_misc(tag)]
        }
        Series::Sporadic972 => {
            vec![gen_l(2), gen_zm(2), gen_misc(MiscGen::Diag11Omega)]
        }
        Series::Sporadic1458 => {
            let v = req(p.variant, "variant", s)?;
            let tag = match v {
                663 => MiscGen::J97,
                666 => MiscGen::J98,
                _ => return Err(invalid("Sporadic1458 variant must be 663 or 666")),
            };
            vec![gen_e(), gen_l(3), gen_i(), gen_misc(tag)]
        }
        Series::Sporadic1701 => {
            let v = req(p.variant, "variant", s)?;
            match v {
                112 => vec![gen_b(7, 2), gen_e(), gen_x(2, 3), gen_t1(1)],
                130 => vec![gen_b(7, 2), gen_e(), gen_x(2, 2), gen_t1(2)],
                131 => vec![gen_b(7, 2), gen_e(), gen_x(2, 2), gen_t2(2)],
                _ => return Err(invalid("Sporadic1701 variant must be 112, 130 or 131")),
            }
        }
        Series::Xi => {
            let (m, j) = (req(p.m, "m", s)?, req(p.j, "j", s)?);
            ensure(m >= 1 && j >= 2, "Xi requires m >= 1 and j >= 2")?;
            vec![gen_e(), gen_q(m, j).scale(&zeta4)]
        }
        Series::XiHat => {
            let (m, j) = (req(p.m, "m", s)?, req(p.j, "j", s)?);
            ensure(m >= 1 && j >= 3, "XiHat requires m >= 1 and j >= 3")?;
            vec![gen_e(), gen_q(m, j).scale(&zeta4), gen_iprime()]
        }
        Series::Pi => {
            let (m, j) = (req(p.m, "m", s)?, req(p.j, "j", s)?);
            ensure(m >= 1 && j >= 2, "Pi requires m >= 1 and j >= 2")?;
            vec![gen_e(), gen_k(), gen_q(m, j)]
        }
        Series::Theta => {
            let m = req(p.m, "m", s)?;
            ensure(m >= 1, "Theta requires m >= 1")?;
            vec![gen_e(), gen_k(), gen_q(m, 0)]
        }
        Series::Upsilon | Series::UpsilonPrime => {
            let m = req(p.m, "m", s)?;
            ensure(m >= 2, "Upsilon/UpsilonPrime requires m >= 2")?;
            let i = if s == Series::Upsilon { 1 } else { 2 };
            vec![gen_e(), gen_q(0, 0), gen_x(i, m)]
        }
        Series::Omega => {
            let m = req(p.m, "m", s)?;
            ensure(m >= 1, "Omega requires m >= 1")?;
            vec![gen_q(m, 0), gen_zm(1)]
        }
    };
    Ok(gens)
}

/// Close the generator set of a series instance with the default cap.
pub fn build(spec: &SeriesSpec) -> Result<GroupData, BuildError> {
    build_with_cap(spec, DEFAULT_ELEMENT_CAP)
}

/// Close the generator set of a series instance with an explicit cap.
pub fn build_with_cap(spec: &SeriesSpec, cap: usize) -> Result<GroupData, BuildError> {
    let gens = generators(spec)?;
    Ok(closure(&gens, cap)?)
}

fn params_n(n: u32) -> Params {
    Params { n: Some(n), ..Params::default() }
}

fn params_l(l: u32) -> Params {
    Params { l: Some(l), ..Params::default() }
}

fn params_m(m: u32) -> Params {
    Params { m: Some(m), ..Params::default() }
}

fn params_j(j: u32) -> Params {
    Params { j: Some(j), ..Params::default() }
}

fn params_nm(n: u32, m: u32) -> Params {
    Params { n: Some(n), m: Some(m), ..Params::default() }
}

fn params_nj(n: u32, j: u32) -> Params {
    Params { n: Some(n), j: Some(j), ..Params::default() }
}

fn params_mj(m: u32, j: u32) -> Params {
    Params { m: Some(m), j: Some(j), ..Params::default() }
}

fn params_nmj(n: u32, m: u32, j: u32) -> Params {
    Params { n: Some(n), m: Some(m), j: Some(j), ..Params::default() }
}

fn params_rk(r: u32, k: u32) -> Params {
    Params { r: Some(r), k: Some(k), ..Params::default() }
}

fn params_rkl(r: u32, k: u32, l: u32) -> Params {
    Params { r: Some(r), k: Some(k), l: Some(l), ..Params::default() }
}

fn params_rkm(r: u32, k: u32, m: u32) -> Params {
    Params { r: Some(r), k: Some(k), m: Some(m), ..Params::default() }
}

fn params_rknm(r: u32, k: u32, n: u32, m: u32) -> Params {
    Params { r: Some(r), k: Some(k), n: Some(n), m: Some(m), ..Params::default() }
}

fn params_variant(v: u32) -> Params {
    Params { variant: Some(v), ..Params::default() }
}

fn make_entry(
    series: Series,
    params: Params,
    expected_order: u64,
    expected_id: Option<Id>,
    expected_su3: bool,
    notes: &str,
) -> CatalogEntry {
    let spec = SeriesSpec { series, params };
    let expected_profile = expected_degree_profile(&spec);
    CatalogEntry {
        spec,
        expected_order,
        expected_id,
        expected_su3,
        expected_profile,
        notes: notes.to_string(),
    }
}

/// Enumerate every catalog entry with expected order below `max_order`,
/// in catalog order.
pub fn enumerate(max_order: u64) -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    let mut push = |e: CatalogEntry| {
        if e.expected_order < max_order {
            out.push(e);
        }
    };

    for &(n, id) in data::DELTA3N2 {
        let n64 = u64::from(n);
        push(make_entry(Series::Delta3n2, params_n(n), 3 * n64 * n64, Some(id), true, ""));
    }
    for &(n, id) in data::DELTA6N2 {
        let n64 = u64::from(n);
        push(make_entry(Series::Delta6n2, params_n(n), 6 * n64 * n64, Some(id), true, ""));
    }
    for (r, k, l) in c_group_parameters(max_order) {
        let order = 3 * u64::from(r) * u64::from(l) * u64::from(l);
        push(make_entry(Series::Cnl, params_rkl(r, k, l), order, None, true, ""));
    }
    for &(l, id) in data::D3LL {
        let l64 = u64::from(l);
        push(make_entry(Series::D3ll, params_l(l), 18 * l64 * l64, Some(id), true, ""));
    }
    for &(r, k, m, id) in data::T_GROUPS {
        let order = p3(m) * u64::from(r);
        push(make_entry(Series::T, params_rkm(r, k, m), order, Some(id), false, ""));
    }
    for &(n, m, id) in data::DELTA3N2M {
        let n64 = u64::from(n);
        push(make_entry(Series::Delta3n2m, params_nm(n, m), p3(m) * n64 * n64, Some(id), false, ""));
    }
    for &(j, id) in data::S4J {
        push(make_entry(Series::S4j, params_j(j), 3 * p2(j + 2), Some(id), false, ""));
    }
    for &(n, j, id) in data::DELTA6N2J {
        let n64 = u64::from(n);
        push(make_entry(
            Series::Delta6n2j,
            params_nj(n, j),
            3 * p2(j) * n64 * n64,
            Some(id),
            false,
            "",
        ));
    }
    for &(n, m, j, id) in data::DELTAPRIME {
        let n64 = u64::from(n);
        push(make_entry(
            Series::DeltaPrime,
            params_nmj(n, m, j),
            p3(m) * p2(j) * n64 * n64,
            Some(id),
            false,
            "",
        ));
    }
    for &(r, k, n, m, id) in data::LRKNM {
        let order = p3(m) * u64::from(r) * u64::from(n) * u64::from(n);
        push(make_entry(Series::Lrknm, params_rknm(r, k, n, m), order, Some(id), false, ""));
    }
    for &(r, k, m, pid, qid, qpid) in data::PQQ {
        let order = p3(m + 1) * u64::from(r);
        push(make_entry(Series::P, params_rkm(r, k, m), order, Some(pid), false, ""));
        push(make_entry(Series::Q, params_rkm(r, k, m), order, Some(qid), false, ""));
        push(make_entry(Series::Qprime, params_rkm(r, k, m), order, Some(qpid), false, ""));
    }
    for &(n, id) in data::XN {
        let n64 = u64::from(n);
        push(make_entry(Series::Xn, params_n(n), 3 * n64 * n64, Some(id), false, ""));
    }
    for &(r, k, m, sid, spid, yid, vid) in data::SSYV {
        let order = p3(m + 2) * u64::from(r);
        push(make_entry(Series::S, params_rkm(r, k, m), order, Some(sid), false, ""));
        push(make_entry(Series::Sprime, params_rkm(r, k, m), order, Some(spid), false, ""));
        push(make_entry(Series::Yrk, params_rkm(r, k, m), order, Some(yid), false, ""));
        push(make_entry(Series::Vrk, params_rkm(r, k, m), order, Some(vid), false, ""));
    }
    for &(r, k, mid, mpid, jid) in data::MMJ {
        let order = 108 * u64::from(r);
        push(make_entry(Series::M, params_rk(r, k), order, Some(mid), false, ""));
        push(make_entry(Series::Mprime, params_rk(r, k), order, Some(mpid), false, ""));
        push(make_entry(Series::Jrk, params_rk(r, k), order, Some(jid), false, ""));
    }
    for &(n, m, id) in data::WNM {
        let n64 = u64::from(n);
        push(make_entry(Series::Wnm, params_nm(n, m), p3(m + 1) * n64 * n64, Some(id), false, ""));
    }
    for &(n, m, id) in data::ZNM {
        let n64 = u64::from(n);
        push(make_entry(Series::Znm, params_nm(n, m), p3(m) * n64 * n64, Some(id), false, ""));
    }
    for &(n, m, id) in data::ZPNM {
        let n64 = u64::from(n);
        let note = if (n, m) == (9, 2) {
            "isomorphic to Znm(n=9,m=2); singlet count 27 follows that group"
        } else {
            ""
        };
        push(make_entry(Series::Zpnm, params_nm(n, m), p3(m) * n64 * n64, Some(id), false, note));
    }
    for &(n, order, id, note) in data::ZPP2 {
        push(make_entry(Series::Zppnm, params_nm(n, 2), order, id, true, note));
    }
    for &(n, m, id) in data::ZPPNM {
        let n64 = u64::from(n);
        push(make_entry(Series::Zppnm, params_nm(n, m), p3(m) * n64 * n64, Some(id), false, ""));
    }
    for &(n, m, j, id) in data::ZNMJ {
        let n64 = u64::from(n);
        push(make_entry(
            Series::Znmj,
            params_nmj(n, m, j),
            p3(m) * p2(j) * n64 * n64,
            Some(id),
            false,
            "",
        ));
    }
    for &(n, id, note) in data::ZPNMJ_SU3 {
        let n64 = u64::from(n);
        push(make_entry(Series::Zpnmj, params_nmj(n, 2, 1), 18 * n64 * n64, Some(id), true, note));
    }
    for &(n, m, j, id) in data::ZPNMJ {
        let n64 = u64::from(n);
        push(make_entry(
            Series::Zpnmj,
            params_nmj(n, m, j),
            p3(m) * p2(j) * n64 * n64,
            Some(id),
            false,
            "",
        ));
    }
    for &(n, m, j, id) in data::HNMJ {
        let n64 = u64::from(n);
        push(make_entry(
            Series::Hnmj,
            params_nmj(n, m, j),
            p3(m + 1) * p2(j) * n64 * n64,
            Some(id),
            false,
            "",
        ));
    }
    for &(m, j, id) in data::YMJ {
        push(make_entry(Series::Ymj, params_mj(m, j), p3(m + 2) * p2(2 * j), Some(id), false, ""));
    }
    for &(m, j, id) in data::GMJ {
        push(make_entry(Series::Gmj, params_mj(m, j), p3(m + 3) * p2(j), Some(id), false, ""));
    }
    push(make_entry(Series::G1296_699, Params::default(), 1296, Some([1296, 699]), false, ""));
    for &(j, id) in data::YJ {
        push(make_entry(Series::Yj, params_j(j), 81 * p2(2 * j), Some(id), false, ""));
    }
    for &(j, id) in data::YTILDEJ {
        push(make_entry(Series::Ytildej, params_j(j), 162 * p2(2 * j), Some(id), false, ""));
    }
    for &(n, m, j, id) in data::UNMJ {
        let n64 = u64::from(n);
        push(make_entry(Series::Unmj, params_nmj(n, m, j), p3(m + 1) * n64 * n64, Some(id), false, ""));
    }
    for &(m, id) in data::LM {
        push(make_entry(Series::Lm, params_m(m), p3(m + 3), Some(id), false, ""));
    }
    push(make_entry(Series::G1701_102, Params::default(), 1701, Some([1701, 102]), false, ""));
    for &(j, id) in data::VJ {
        push(make_entry(Series::Vj, params_j(j), 81 * p2(2 * j), Some(id), false, ""));
    }
    for &(j, id) in data::DJ {
        push(make_entry(Series::Dj, params_j(j), 243 * p2(2 * j), Some(id), false, ""));
    }
    for &(m, id) in data::JM {
        push(make_entry(Series::Jm, params_m(m), 81 * p3(m), Some(id), false, ""));
    }
    for &v in data::SPORADIC729 {
        push(make_entry(Series::Sporadic729, params_variant(v as u32), 729, Some([729, v]), false, ""));
    }
    push(make_entry(Series::Sporadic972, Params::default(), 972, Some([972, 170]), false, ""));
    for &v in data::SPORADIC1458 {
        push(make_entry(
            Series::Sporadic1458,
            params_variant(v as u32),
            1458,
            Some([1458, v]),
            false,
            "",
        ));
    }
    for &v in data::SPORADIC1701 {
        push(make_entry(
            Series::Sporadic1701,
            params_variant(v as u32),
            1701,
            Some([1701, v]),
            false,
            "",
        ));
    }
    for &(m, j, id, su3) in data::XI {
        let note = if su3 { "subgroup of SU(3): Sigma(36x3)" } else { "" };
        push(make_entry(Series::Xi, params_mj(m, j), p3(m + 2) * p2(j), Some(id), su3, note));
    }
    for &(m, j, id) in data::XIHAT {
        push(make_entry(Series::XiHat, params_mj(m, j), p3(m + 2) * p2(j + 1), Some(id), false, ""));
    }
    for &(m, j, id) in data::PI {
        push(make_entry(Series::Pi, params_mj(m, j), p3(m + 2) * p2(j + 2), Some(id), false, ""));
    }
    for &(m, id, su3) in data::THETA {
        let note = if su3 { "subgroup of SU(3): Sigma(72x3)" } else { "" };
        push(make_entry(Series::Theta, params_m(m), 72 * p3(m), Some(id), su3, note));
    }
    for &(m, id) in data::UPSILON {
        push(make_entry(Series::Upsilon, params_m(m), 72 * p3(m), Some(id), false, ""));
    }
    for &(m, id, su3) in data::UPSILONPRIME {
        let note = if su3 { "subgroup of SU(3): Sigma(216x3)" } else { "" };
        push(make_entry(Series::UpsilonPrime, params_m(m), 72 * p3(m), Some(id), su3, note));
    }
    for &(m, id) in data::OMEGA {
        push(make_entry(Series::Omega, params_m(m), 72 * p3(m + 1), Some(id), false, ""));
    }
    out
}

/// Computed invariants of one built group.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Computed {
    /// Group order.
    pub order: u64,
    /// SU(3) membership.
    pub su3: bool,
    /// Number of conjugacy classes.
    pub class_count: usize,
    /// Dimension profile, when the degree computation succeeded.
    pub profile: Option<DegreeProfile>,
    /// Abelianization invariants.
    pub abelian_invariants: Vec<u64>,
    /// Order of the determinant image in U(1).
    pub det_image_order: u64,
    /// Conclusion trichotomy class.
    pub monomial_class: MonomialClass,
    /// Cyclic direct factor order, if any.
    pub cyclic_factor: Option<u64>,
}

/// One named comparison in a verification report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    /// Check name.
    pub name: String,
    /// Whether it passed.
    pub pass: bool,
    /// What was expected.
    pub expected: String,
    /// What was computed.
    pub got: String,
}

/// Result of verifying one catalog entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    /// The computed invariants; `None` when the build itself failed.
    pub computed: Option<Computed>,
    /// Per-check outcomes.
    pub checks: Vec<Check>,
    /// Conjunction of all checks.
    pub pass: bool,
}

fn profile_str(p: &Option<DegreeProfile>) -> String {
    match p {
        Some(p) => p.to_string(),
        None => "-".to_string(),
    }
}

/// Build the group of an entry and compare every computed invariant with
/// the expectation, using the default degree-splitter seed.
pub fn verify_entry(entry: &CatalogEntry) -> VerificationReport {
    verify_entry_seeded(entry, chardeg::DEFAULT_SEED)
}

/// [`verify_entry`] with an explicit degree-splitter seed.
pub fn verify_entry_seeded(entry: &CatalogEntry, seed: u64) -> VerificationReport {
    let mut checks = Vec::new();
    let g = match build(&entry.spec) {
        Ok(g) => g,
        Err(e) => {
            checks.push(Check {
                name: "build".into(),
                pass: false,
                expected: "closure succeeds".to_string(),
                got: e.to_string(),
            });
            return VerificationReport { computed: None, checks, pass: false };
        }
    };

    let order = g.order() as u64;
    let su3 = g.is_subgroup_of_su3();
    let classes = g.conjugacy_classes();
    let profile_res = chardeg::character_degrees_seeded(&g, seed);
    let profile = profile_res.as_ref().ok().cloned();
    let monomial_class = g.monomial_class();
    let cyclic_factor = g.has_cyclic_direct_factor();

    checks.push(Check {
        name: "order".into(),
        pass: order == entry.expected_order,
        expected: entry.expected_order.to_string(),
        got: order.to_string(),
    });
    checks.push(Check {
        name: "su3".into(),
        pass: su3 == entry.expected_su3,
        expected: entry.expected_su3.to_string(),
        got: su3.to_string(),
    });
    if entry.expected_profile.is_some() {
        let pass = profile == entry.expected_profile;
        checks.push(Check {
            name: "profile".into(),
            pass,
            expected: profile_str(&entry.expected_profile),
            got: match &profile_res {
                Ok(p) => p.to_string(),
                Err(e) => e.to_string(),
            },
        });
    }
    let sum_ok = match &profile_res {
        Ok(p) => chardeg::verify_profile(p, &g),
        Err(_) => false,
    };
    checks.push(Check {
        name: "sum_rules".into(),
        pass: sum_ok,
        expected: "degree sum rules hold".to_string(),
        got: match &profile_res {
            Ok(p) => format!("{p}: {}", if sum_ok { "ok" } else { "violated" }),
            Err(e) => e.to_string(),
        },
    });
    checks.push(Check {
        name: "cyclic_factor".into(),
        pass: cyclic_factor.is_none(),
        expected: "none".to_string(),
        got: match cyclic_factor {
            Some(k) => k.to_string(),
            None => "none".to_string(),
        },
    });
    let monomial_pass = if entry.spec.series.is_nonmonomial() {
        let outside = profile
            .as_ref()
            .map(|p| p.counts().keys().any(|d| ![1, 2, 3, 6].contains(d)))
            .unwrap_or(false);
        monomial_class == MonomialClass::NonMonomial && outside
    } else {
        let support_ok = profile
            .as_ref()
            .map(|p| {
                let allowed: &[u64] = match monomial_class {
                    MonomialClass::Rvw => &[1, 3],
                    MonomialClass::MonomialStu => &[1, 2, 3, 6],
                    MonomialClass::NonMonomial => &[],
                };
                p.counts().keys().all(|d| allowed.contains(d))
            })
            .unwrap_or(false);
        monomial_class != MonomialClass::NonMonomial && support_ok
    };
    checks.push(Check {
        name: "monomial".into(),
        pass: monomial_pass,
        expected: if entry.spec.series.is_nonmonomial() {
            "NON_MONOMIAL with a dimension outside {1,2,3,6}".to_string()
        } else {
            "monomial with matching profile support".to_string()
        },
        got: format!("{} {}", monomial_class, profile_str(&profile)),
    });

    let pass = checks.iter().all(|c| c.pass);
    VerificationReport {
        computed: Some(Computed {
            order,
            su3,
            class_count: classes.count(),
            profile,
            abelian_invariants: g.abelian_invariants(),
            det_image_order: g.det_image_order(),
            monomial_class,
            cyclic_factor,
        }),
        checks,
        pass,
    }
}
