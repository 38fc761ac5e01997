#![allow(dead_code)]

use qclone_core::qmath::{Complex, Matrix4, Vector4};
use qclone_core::states::PureState2Q;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex_in_unit_box(r: &mut impl Rng) -> Complex {
    Complex::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
}

/// Hermitian matrix with every entry modulus at most one.
pub fn hermitian(r: &mut impl Rng) -> Matrix4 {
    let mut m = Matrix4::zero();
    for i in 0..4 {
        m[(i, i)] = Complex::new(r.gen_range(-1.0..1.0), 0.0);
        for j in (i + 1)..4 {
            let z = complex_in_unit_box(r) * std::f64::consts::FRAC_1_SQRT_2;
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

pub fn unit_vector(r: &mut impl Rng) -> Vector4 {
    loop {
        let v: Vector4 = std::array::from_fn(|_| complex_in_unit_box(r));
        let n: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-3 {
            return v.map(|z| z / n);
        }
    }
}

pub fn pure_state(r: &mut impl Rng) -> PureState2Q {
    PureState2Q::new(unit_vector(r)).unwrap()
}

/// B B^H normalized to unit trace; a generic full-rank density matrix.
pub fn density_matrix(r: &mut impl Rng) -> Matrix4 {
    let mut b = Matrix4::zero();
    for i in 0..4 {
        for j in 0..4 {
            b[(i, j)] = complex_in_unit_box(r);
        }
    }
    let m = b * b.adjoint();
    m.scale(1.0 / m.trace().re).hermitian_part()
}

/// Haar-ish single-qubit unitary from a random unit quaternion and phase.
pub fn qubit_unitary(r: &mut impl Rng) -> [[Complex; 2]; 2] {
    let v = loop {
        let v: [f64; 4] = std::array::from_fn(|_| r.gen_range(-1.0..1.0));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 && n <= 1.0 {
            break v.map(|x| x / n);
        }
    };
    let a = Complex::new(v[0], v[1]);
    let b = Complex::new(v[2], v[3]);
    let g = Complex::from_polar(1.0, r.gen_range(0.0..std::f64::consts::TAU));
    [[g * a, -g * b.conj()], [g * b, g * a.conj()]]
}

pub fn real_diag_matrix(d: [f64; 4]) -> Matrix4 {
    Matrix4::from_real_diagonal(d)
}

pub fn alpha_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}
