mod common;

use common::*;
use proptest::prelude::*;
use qclone_core::cloners::*;
use qclone_core::entanglement::*;
use qclone_core::qmath::{inner, spin_flip_operator, Matrix4};
use qclone_core::states::*;

fn cloner_outputs() -> Vec<DensityMatrix2Q> {
    let mut out = Vec::new();
    for alpha in alpha_grid(101) {
        let psi = psi_minus_family(alpha).unwrap();
        out.push(wzcm_clone(&to_bell_basis(&psi)));
        out.push(scm_clone(&psi, CloneCount::TWO));
        for s in alpha_grid(21) {
            out.push(acm_clone(&psi, s).unwrap());
        }
    }
    out
}

#[test]
fn generic_route_agrees_with_xstate_oracle() {
    for rho in cloner_outputs() {
        let generic = concurrence(&rho).unwrap().concurrence;
        let oracle = concurrence_xstate(&rho).unwrap();
        assert!((generic - oracle).abs() <= 1e-9, "{generic} vs {oracle}");
    }
}

#[test]
fn acm_closed_form_concurrence() {
    for alpha in alpha_grid(101) {
        let beta = (1.0 - alpha * alpha).sqrt();
        let psi = psi_minus_family(alpha).unwrap();
        for s in alpha_grid(21) {
            let want = 2.0 * (s * alpha * beta - (1.0 - s) / 4.0).max(0.0);
            let c = concurrence(&acm_clone(&psi, s).unwrap())
                .unwrap()
                .concurrence;
            assert!((c - want).abs() <= 1e-9);
        }
        let wz = concurrence(&wzcm_clone(&to_bell_basis(&psi)))
            .unwrap()
            .concurrence;
        assert!((wz - 2.0 * alpha * beta).abs() <= 1e-12);
    }
}

#[test]
fn pure_state_concurrence_law() {
    let mut r = rng(31);
    let y = spin_flip_operator();
    for _ in 0..1000 {
        let psi = pure_state(&mut r);
        let flipped = y.mul_vec(&psi.amplitudes().map(|z| z.conj()));
        let want = inner(psi.amplitudes(), &flipped).norm();
        let got = concurrence(&density_of(&psi)).unwrap().concurrence;
        assert!((got - want).abs() <= 1e-9, "{got} vs {want}");
    }
}

#[test]
fn lambda_consistency() {
    let mut r = rng(32);
    let mut states: Vec<DensityMatrix2Q> = (0..300)
        .map(|_| DensityMatrix2Q::new(density_matrix(&mut r)).unwrap())
        .collect();
    states.extend((0..300).map(|_| density_of(&pure_state(&mut r))));
    for rho in states {
        let report = concurrence(&rho).unwrap();
        let sum_sq: f64 = report.lambdas.iter().map(|l| l * l).sum();
        let tr = (*rho.matrix() * spin_flip(&rho)).trace().re;
        assert!((sum_sq - tr).abs() <= 1e-9);
        assert!(report.lambdas.windows(2).all(|w| w[0] >= w[1]));
        assert!(report.lambdas.iter().all(|&l| l >= 0.0));
        assert!((report.eof - eof_from_concurrence(report.concurrence).unwrap()).abs() <= 1e-12);
        // The Hermitian-product route gives the same lambdas up to its sqrt(eps) floor.
        let alt = lambdas_via_hermitian_product(&rho).unwrap();
        for (a, b) in alt.iter().zip(report.lambdas) {
            assert!((a - b).abs() <= 1e-6);
        }
    }
}

#[test]
fn eof_is_monotone() {
    let mut prev = -1.0;
    for k in 0..=1000 {
        let e = eof_from_concurrence(f64::from(k) / 1000.0).unwrap();
        assert!(e >= prev);
        prev = e;
    }
}

#[test]
fn wzcm_preserves_entanglement_on_grid() {
    for alpha in alpha_grid(201) {
        let psi = psi_minus_family(alpha).unwrap();
        let input = entanglement_of_formation(&density_of(&psi)).unwrap();
        let clone = entanglement_of_formation(&wzcm_clone(&to_bell_basis(&psi))).unwrap();
        assert!((input - clone).abs() <= 1e-10, "alpha={alpha}");
    }
}

#[test]
fn universal_cloners_never_increase_entanglement() {
    for alpha in alpha_grid(101) {
        let psi = psi_minus_family(alpha).unwrap();
        let input = entanglement_of_formation(&density_of(&psi)).unwrap();
        for s in alpha_grid(21) {
            let e = entanglement_of_formation(&acm_clone(&psi, s).unwrap()).unwrap();
            assert!(e <= input + 1e-12);
        }
    }
}

#[test]
fn xstate_report_carries_method_tag() {
    let rho = scm_clone(&psi_minus_family(0.6).unwrap(), CloneCount::TWO);
    let r = concurrence_xstate_report(&rho).unwrap();
    assert_eq!(r.method, ConcurrenceMethod::XStateOracle);
    assert!((r.concurrence - concurrence(&rho).unwrap().concurrence).abs() < 1e-12);
}

fn local_unitary_conjugate(rho: &Matrix4, seed: u64) -> Matrix4 {
    let mut r = rng(seed);
    let u = Matrix4::kron2(&qubit_unitary(&mut r), &qubit_unitary(&mut r));
    (u * *rho * u.adjoint()).hermitian_part()
}

proptest! {
    #[test]
    fn concurrence_is_local_unitary_invariant(seed in any::<u64>(), mixed in any::<bool>()) {
        let mut r = rng(seed);
        let rho = if mixed {
            DensityMatrix2Q::new(density_matrix(&mut r)).unwrap()
        } else {
            density_of(&pure_state(&mut r))
        };
        let before = concurrence(&rho).unwrap().concurrence;
        let moved = DensityMatrix2Q::new(local_unitary_conjugate(rho.matrix(), seed ^ 0xabcd)).unwrap();
        let after = concurrence(&moved).unwrap().concurrence;
        prop_assert!((before - after).abs() <= 1e-9);
    }

    #[test]
    fn werner_family_concurrence(p in 0.0f64..=1.0) {
        // p |Psi-><Psi-| + (1 - p) I / 4 has C = max(0, (3p - 1) / 2).
        let singlet = density_of(&bell_state(BellState::PsiMinus));
        let rho = shrink_map(&singlet, p).unwrap();
        let c = concurrence(&rho).unwrap().concurrence;
        prop_assert!((c - ((3.0 * p - 1.0) / 2.0).max(0.0)).abs() <= 1e-12);
    }

    #[test]
    fn fidelity_bounds(seed in any::<u64>()) {
        let mut r = rng(seed);
        let psi = pure_state(&mut r);
        let rho = DensityMatrix2Q::new(density_matrix(&mut r)).unwrap();
        let f = fidelity(&psi, &rho);
        prop_assert!((0.0..=1.0).contains(&f));
    }
}
