//! Constructors for every generator matrix used by the catalog, exactly as
//! printed in the source tables.

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::mat3::Mat3;
use num_bigint::BigInt;

fn zeta(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

fn zero1() -> Cyclotomic {
    Cyclotomic::zero(1)
}

fn one1() -> Cyclotomic {
    Cyclotomic::one(1)
}

/// E: cyclic permutation (1,2,3) -> (2,3,1).
pub fn gen_e() -> Mat3 {
    Mat3::from_entries([
        zero1(),
        one1(),
        zero1(),
        zero1(),
        zero1(),
        one1(),
        one1(),
        zero1(),
        zero1(),
    ])
}

/// I: antidiagonal of -1 entries; an involution in SU(3).
pub fn gen_i() -> Mat3 {
    let m = one1().neg();
    Mat3::from_entries([
        zero1(),
        zero1(),
        m.clone(),
        zero1(),
        m.clone(),
        zero1(),
        m,
        zero1(),
        zero1(),
    ])
}

/// I' = F_{0,1} = -I: antidiagonal of +1 entries.
pub fn gen_iprime() -> Mat3 {
    gen_i().neg()
}

/// L_n = diag(1, nu, nu^-1) with nu = exp(2i*pi/n).
pub fn gen_l(n: u32) -> Mat3 {
    Mat3::diag(one1(), zeta(n, 1), zeta(n, -1))
}

/// B_{n,k} = diag(nu, nu^k, nu^(-1-k)).
pub fn gen_b(n: u32, k: u32) -> Mat3 {
    Mat3::diag(zeta(n, 1), zeta(n, k as i64), zeta(n, -1 - k as i64))
}

/// G_{n,r} = diag(1, nu^-r, nu^r) = (L_n)^-r.
pub fn gen_g(n: u32, r: u32) -> Mat3 {
    Mat3::diag(one1(), zeta(n, -(r as i64)), zeta(n, r as i64))
}

fn mu(m: u32) -> Cyclotomic {
    zeta(3u32.pow(m), 1)
}

/// E_m = mu * E with mu = exp(2i*pi/3^m); E_0 = E.
pub fn gen_em(m: u32) -> Mat3 {
    gen_e().scale(&mu(m))
}

/// Z_m: 3-cycle with a single phase mu in the top-right corner.
pub fn gen_zm(m: u32) -> Mat3 {
    Mat3::from_entries([
        zero1(),
        zero1(),
        mu(m),
        one1(),
        zero1(),
        zero1(),
        zero1(),
        one1(),
        zero1(),
    ])
}

/// T_1(m) = diag(1, mu, mu^2).
pub fn gen_t1(m: u32) -> Mat3 {
    Mat3::diag(one1(), mu(m), zeta(3u32.pow(m), 2))
}

/// T_2(m) = diag(1, mu^2, mu).
pub fn gen_t2(m: u32) -> Mat3 {
    Mat3::diag(one1(), zeta(3u32.pow(m), 2), mu(m))
}

/// F_{m,j}: antidiagonal of -xi entries, xi = exp[2i*pi/(3^m 2^j)];
/// F_{0,0} = I and F_{0,1} = I'.
pub fn gen_f(m: u32, j: u32) -> Mat3 {
    let xi = zeta(3u32.pow(m) * 2u32.pow(j), 1);
    gen_i().scale(&xi)
}

fn omega(k: i64) -> Cyclotomic {
    zeta(3, k)
}

/// X_1(m) = diag(mu w, mu w, mu w^2), X_2(m) = diag(mu w^2, mu w^2, mu w),
/// X_3(m) = diag(mu, mu, mu), with w = exp(2i*pi/3).
pub fn gen_x(i: u32, m: u32) -> Mat3 {
    let mu = mu(m);
    match i {
        1 => Mat3::diag(mu.mul(&omega(1)), mu.mul(&omega(1)), mu.mul(&omega(2))),
        2 => Mat3::diag(mu.mul(&omega(2)), mu.mul(&omega(2)), mu.mul(&omega(1))),
        3 => Mat3::scalar(mu),
        _ => panic!("gen_x index must be 1, 2 or 3"),
    }
}

/// Y_1(m) = diag(mu, mu w, mu w^2), Y_2(m) = diag(mu, mu w^2, mu w).
pub fn gen_y(i: u32, m: u32) -> Mat3 {
    let mu = mu(m);
    match i {
        1 => Mat3::diag(mu.clone(), mu.mul(&omega(1)), mu.mul(&omega(2))),
        2 => Mat3::diag(mu.clone(), mu.mul(&omega(2)), mu.mul(&omega(1))),
        _ => panic!("gen_y index must be 1 or 2"),
    }
}

/// The exact prefactor -i/sqrt(3) = -i * sqrt(3)/3, with
/// sqrt(3) = zeta_12 - zeta_12^5, an element of Q(zeta_12).
fn minus_i_over_sqrt3() -> Cyclotomic {
    let sqrt3 = zeta(12, 1).sub(&zeta(12, 5));
    let minus_i = zeta(4, 3);
    minus_i
        .mul(&sqrt3)
        .scale(&Rational::new(BigInt::from(1), BigInt::from(3)))
}

/// K = (-i/sqrt(3)) [[1,1,1],[1,w,w^2],[1,w^2,w]]; K is in SU(3).
pub fn gen_k() -> Mat3 {
    let core = Mat3::from_entries([
        one1(),
        one1(),
        one1(),
        one1(),
        omega(1),
        omega(2),
        one1(),
        omega(2),
        omega(1),
    ]);
    core.scale(&minus_i_over_sqrt3())
}

/// Q_{m,j} = (-i xi/sqrt(3)) [[1,w^2,w^2],[w^2,w^2,1],[1,w,1]] with
/// xi = exp[2i*pi/(3^m 2^j)]; det Q_{m,j} = xi^3.
pub fn gen_q(m: u32, j: u32) -> Mat3 {
    let xi = zeta(3u32.pow(m) * 2u32.pow(j), 1);
    let core = Mat3::from_entries([
        one1(),
        omega(2),
        omega(2),
        omega(2),
        omega(2),
        one1(),
        one1(),
        omega(1),
        one1(),
    ]);
    core.scale(&minus_i_over_sqrt3().mul(&xi))
}

/// The six monomial forms of the conclusion: R/V/W carry even permutation
/// parts, S/T/U odd ones; phases are nu^a, nu^b, nu^c with nu = exp(2i*pi/n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialForm {
    R,
    V,
    W,
    S,
    T,
    U,
}

pub fn gen_rvw(form: MonomialForm, n: u32, a: i64, b: i64, c: i64) -> Mat3 {
    let (pa, pb, pc) = (zeta(n, a), zeta(n, b), zeta(n, c));
    let z = zero1;
    let e = match form {
        // R = [[0,0,nu^a],[nu^b,0,0],[0,nu^c,0]]
        MonomialForm::R => [z(), z(), pa, pb, z(), z(), z(), pc, z()],
        // V = [[0,nu^a,0],[0,0,nu^b],[nu^c,0,0]]
        MonomialForm::V => [z(), pa, z(), z(), z(), pb, pc, z(), z()],
        // W = diag(nu^a, nu^b, nu^c)
        MonomialForm::W => [pa, z(), z(), z(), pb, z(), z(), z(), pc],
        // S = [[nu^a,0,0],[0,0,nu^b],[0,nu^c,0]]
        MonomialForm::S => [pa, z(), z(), z(), z(), pb, z(), pc, z()],
        // T = [[0,0,nu^a],[0,nu^b,0],[nu^c,0,0]]
        MonomialForm::T => [z(), z(), pa, z(), pb, z(), pc, z(), z()],
        // U = [[0,nu^a,0],[nu^b,0,0],[0,0,nu^c]]
        MonomialForm::U => [z(), pa, z(), pb, z(), z(), z(), z(), pc],
    };
    Mat3::from_entries(e)
}

/// One-off generators used by single series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MiscGen {
    /// diag(1, 1, w) — G(m,j) series and the sporadic [972,170].
    Diag11Omega,
    /// diag(xi, xi, xi^2) with xi = exp[2i*pi/(3*2^j)] — Y(j) series.
    XiDiag { j: u32 },
    /// diag(nu, nu, nu^2) with nu = exp(2i*pi/n) — U(n,m,j) series.
    NuDiag { n: u32 },
    /// mu * T_1(m-j+1) with mu = exp(2i*pi/3^m) — U(n,m,j) series; at j = m
    /// this reduces to Y_1(m).
    MuT1 { m: u32, j: u32 },
    /// muh * diag(mut^2, w, w) with muh = exp(2i*pi/27), mut = exp(2i*pi/9)
    /// — sporadic [729,96].
    J96,
    /// muh * diag(w, w mut, w mut) — sporadic [729,97].
    J97,
    /// muh * diag(w^2, w mut, w mut) — sporadic [729,98].
    J98,
}

pub fn gen_misc(tag: MiscGen) -> Mat3 {
    match tag {
        MiscGen::Diag11Omega => Mat3::diag(one1(), one1(), omega(1)),
        MiscGen::XiDiag { j } => {
            let n = 3 * 2u32.pow(j);
            Mat3::diag(zeta(n, 1), zeta(n, 1), zeta(n, 2))
        }
        MiscGen::NuDiag { n } => Mat3::diag(zeta(n, 1), zeta(n, 1), zeta(n, 2)),
        MiscGen::MuT1 { m, j } => {
            assert!(j <= m, "MuT1 requires j <= m");
            gen_t1(m - j + 1).scale(&mu(m))
        }
        MiscGen::J96 => {
            Mat3::diag(zeta(9, 2), omega(1), omega(1)).scale(&zeta(27, 1))
        }
        MiscGen::J97 => {
            let wm = omega(1).mul(&zeta(9, 1));
            Mat3::diag(omega(1), wm.clone(), wm).scale(&zeta(27, 1))
        }
        MiscGen::J98 => {
            let wm = omega(1).mul(&zeta(9, 1));
            Mat3::diag(omega(2), wm.clone(), wm).scale(&zeta(27, 1))
        }
    }
}

#[cfg(test)]
mod tests;
