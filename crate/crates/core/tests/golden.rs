mod common;

use common::*;
use spectra_core::drg::{
    check_bipartite_oddgirth, check_bipartite_omega, check_girth_regular, check_gamma_sufficient,
    check_monic_sufficient, check_spectral_excess, Girth, Sufficient, DEFAULT_DRG_TOL, PATTERN_TOL,
};
use spectra_core::graph::{average_excess, distance_profile, generators};
use spectra_core::linalg::characteristic_polynomial;
use spectra_core::orthopoly::{hoffman, inner_product, spectral_excess};
use spectra_core::preintersect::{
    leading_coeffs_from_preintersection, recurrence_from_omega, xi_from_spectrum,
};
use spectra_core::spectral::DEFAULT_CLUSTER_TOL;
use spectra_core::transforms::{
    closed_form_moments, hoffman_roots, lambda0_from_h, lambda0_from_omega,
    multiplicities_from_polys, multiplicities_via_phi, parse_path, phi, polys_from_preintersection,
    polys_via_charpoly, preintersection_from_moments, recurrence_eigenpairs, roundtrip_check,
    spectrum_from_polys, spectrum_from_preintersection,
};
use spectra_core::{
    parse_graph, polys_from_spectrum, preintersection_from_polys, spectrum_of_graph, walk_moments,
    Graph, GraphFormat, Poly, PolySequence, PreintersectionSet, Representation, Spectrum,
};

const TOL: f64 = 1e-10;

fn assert_close(got: f64, want: f64, tol: f64) {
    assert!(
        (got - want).abs() <= tol * want.abs().max(1.0),
        "got {got}, want {want}"
    );
}

fn assert_all_close(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
    for (g, w) in got.iter().zip(want) {
        assert_close(*g, *w, tol);
    }
}

fn k3() -> Spectrum {
    Spectrum::new(vec![2.0, -1.0], vec![1, 2]).unwrap()
}

fn k2_polys() -> PolySequence {
    PolySequence::new(vec![vec![1.0], vec![0.0, 1.0]], 1.0).unwrap()
}

fn polys_447() -> PolySequence {
    PolySequence::new(omega_447(), 3.0).unwrap()
}

fn pre_447() -> PreintersectionSet {
    PreintersectionSet::new(
        ALPHA_447.map(frac).to_vec(),
        BETA_447.map(frac).to_vec(),
        GAMMA_447.map(frac).to_vec(),
        3.0,
    )
    .unwrap()
}

fn spectrum(g: &Graph) -> Spectrum {
    spectrum_of_graph(g, DEFAULT_CLUSTER_TOL).unwrap()
}

fn pre_of(g: &Graph) -> (PolySequence, PreintersectionSet) {
    let ps = polys_from_spectrum(&spectrum(g)).unwrap();
    let pre = preintersection_from_polys(&ps).unwrap();
    (ps, pre)
}

/// graph6 decoded straight from the byte rules: `n = b_0 − 63`, then six
/// bits per byte over the upper triangle in column order.
fn decode_graph6(s: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes: Vec<u8> = s.trim().bytes().map(|b| b - 63).collect();
    let n = bytes[0] as usize;
    let bits: Vec<bool> = bytes[1..]
        .iter()
        .flat_map(|b| (0..6).rev().map(move |k| (b >> k) & 1 == 1))
        .collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    (n, edges)
}

fn dense_adjacency(g: &Graph) -> Vec<Vec<f64>> {
    let mut a = vec![vec![0.0; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    a
}

fn matmul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn trace_of_power(g: &Graph, k: usize) -> f64 {
    let a = dense_adjacency(g);
    let mut p: Vec<Vec<f64>> = (0..g.n())
        .map(|i| (0..g.n()).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for _ in 0..k {
        p = matmul(&p, &a);
    }
    (0..g.n()).map(|i| p[i][i]).sum()
}

/// `(c_i, a_i, b_i)` of the distance partition around vertex 0.
fn intersection_array(g: &Graph) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let dist = floyd_warshall(g);
    let diam = *dist[0].iter().max().unwrap();
    let (mut c, mut a, mut b) = (vec![], vec![], vec![]);
    for i in 0..=diam {
        let u = (0..g.n()).find(|&u| dist[0][u] == i).unwrap();
        let count = |t: usize| g.neighbors(u).iter().filter(|&&v| dist[0][v] == t).count() as f64;
        if i > 0 {
            c.push(count(i - 1));
        }
        a.push(count(i));
        if i < diam {
            b.push(count(i + 1));
        }
    }
    (c, a, b)
}

/// `p_d(λ_0) = n / π_0² · (Σ_i 1 / (m_i π_i²))^{−1}`, with
/// `π_i = Π_{j≠i} |λ_i − λ_j|`.
fn pi_formula(s: &Spectrum) -> f64 {
    let ev = s.eigenvalues();
    let pi = |i: usize| -> f64 {
        (0..ev.len()).filter(|&j| j != i).map(|j| (ev[i] - ev[j]).abs()).product()
    };
    let sum: f64 = (0..ev.len())
        .map(|i| 1.0 / (s.multiplicities()[i] as f64 * pi(i).powi(2)))
        .sum();
    s.n() as f64 / (pi(0).powi(2) * sum)
}

#[test]
fn parse_small_graphs() {
    let k3 = parse_graph(b"0 1\n1 2\n2 0", GraphFormat::EdgeList).unwrap();
    assert_eq!((k3.n(), k3.edges().len()), (3, 3));
    let k2 = parse_graph(b"01\n10", GraphFormat::AdjMatrix).unwrap();
    assert_eq!((k2.n(), k2.edges().len()), (2, 1));
}

#[test]
fn parse_petersen_graph6() {
    let text = "IheA@GUAo";
    let g = parse_graph(text.as_bytes(), GraphFormat::Graph6).unwrap();
    let (n, edges) = decode_graph6(text);
    assert_eq!((g.n(), g.edges().len()), (n, edges.len()));
    assert_eq!((n, edges.len()), (10, 15));
    for (u, v) in edges {
        assert!(g.neighbors(u).contains(&v));
    }
    assert!(g.is_regular());
}

#[test]
fn distance_counts() {
    let dp = distance_profile(&generators::complete(3));
    assert_eq!(dp.diameter, 1);
    assert!(dp.counts.iter().all(|c| c == &[1, 2]));
    let dp = distance_profile(&generators::path(3));
    assert_eq!(dp.counts, vec![vec![1, 1, 1], vec![1, 2, 0], vec![1, 1, 1]]);
    let pet = generators::petersen();
    let dp = distance_profile(&pet);
    assert!(dp.counts.iter().all(|c| c == &[1, 3, 6]));
    assert_eq!(average_excess(&dp, 2), mean_at_distance(&pet, 2));
    assert_eq!(average_excess(&dp, 2), 6.0);
    assert_eq!(average_excess(&distance_profile(&generators::complete(3)), 1), 2.0);
    assert_close(average_excess(&distance_profile(&generators::path(3)), 2), 2.0 / 3.0, 1e-15);
}

#[test]
fn spectra_of_small_graphs() {
    let s = spectrum(&generators::complete(3));
    assert_all_close(s.eigenvalues(), &[2.0, -1.0], TOL);
    assert_eq!(s.multiplicities(), &[1, 2]);
    let s = spectrum(&generators::path(3));
    let r2 = 2f64.sqrt();
    assert_all_close(s.eigenvalues(), &[r2, 0.0, -r2], TOL);
    assert_eq!(s.multiplicities(), &[1, 1, 1]);

    // Petersen: the minimal polynomial (x − 3)(x − 1)(x + 2) kills A, and
    // tr A^0, tr A, tr A^2 pin the multiplicities of those three roots.
    let pet = generators::petersen();
    let a = dense_adjacency(&pet);
    let shift = |c: f64| -> Vec<Vec<f64>> {
        let mut m = a.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= c;
        }
        m
    };
    let prod = matmul(&matmul(&shift(3.0), &shift(1.0)), &shift(-2.0));
    assert!(prod.iter().flatten().all(|x| x.abs() < 1e-12));
    assert_eq!([trace_of_power(&pet, 0), trace_of_power(&pet, 1), trace_of_power(&pet, 2)], [10.0, 0.0, 30.0]);
    let s = spectrum(&pet);
    assert_all_close(s.eigenvalues(), &[3.0, 1.0, -2.0], TOL);
    assert_eq!(s.multiplicities(), &[1, 5, 4]);
}

#[test]
fn walk_moment_values() {
    let m = walk_moments(&spectrum_447(), 5);
    assert_all_close(&m.c, &[1.0, 0.0, 8.0 / 3.0, 2.0 / 3.0, 16.0, 40.0 / 3.0], TOL);
    assert_all_close(&walk_moments(&k3(), 3).c, &[1.0, 0.0, 2.0, 2.0], TOL);
    let pet = generators::petersen();
    let m = walk_moments(&spectrum(&pet), 4);
    // a cubic graph of girth 5 has k(2k − 1) = 15 closed 4-walks per vertex
    assert_eq!(trace_of_power(&pet, 4) / 10.0, 15.0);
    assert_close(m.c[4], 15.0, TOL);
}

#[test]
fn spectral_inner_products() {
    for s in [spectrum_447(), k3(), petersen_spectrum()] {
        assert_close(inner_product(&Poly::one(), &Poly::one(), &s), 1.0, TOL);
        assert!(inner_product(&Poly::x(), &Poly::one(), &s).abs() < TOL);
    }
    assert_close(inner_product(&Poly::x(), &Poly::x(), &spectrum_447()), 8.0 / 3.0, TOL);
}

#[test]
fn predistance_polynomials_447() {
    let ps = polys_from_spectrum(&spectrum_447()).unwrap();
    for (row, want) in ps.omega().iter().zip(omega_447()) {
        assert_all_close(row, &want, 1e-9);
    }
    let k3 = polys_from_spectrum(&k3()).unwrap();
    assert_all_close(&k3.omega()[1], &[0.0, 1.0], TOL);
}

#[test]
fn hoffman_polynomials() {
    let h = hoffman(&polys_447());
    assert_all_close(h.coeffs(), &HOFFMAN_447.map(frac), 1e-12);
    let h = hoffman(&polys_from_spectrum(&k3()).unwrap());
    assert_all_close(h.coeffs(), &[1.0, 1.0], TOL);
    assert_close(h.eval(2.0), 3.0, TOL);
    let h = hoffman(&polys_from_spectrum(&petersen_spectrum()).unwrap());
    assert_close(h.eval(3.0), 10.0, TOL);
    assert!(h.eval(1.0).abs() < TOL && h.eval(-2.0).abs() < TOL);
}

#[test]
fn spectral_excess_values() {
    assert_close(spectral_excess(&polys_447()), 39.0 / 646.0, 1e-12);
    assert_close(pi_formula(&spectrum_447()), 39.0 / 646.0, 1e-12);
    let pet = polys_from_spectrum(&petersen_spectrum()).unwrap();
    assert_close(spectral_excess(&pet), pi_formula(&petersen_spectrum()), TOL);
    assert_close(spectral_excess(&pet), 6.0, TOL);
    assert_close(spectral_excess(&polys_from_spectrum(&k3()).unwrap()), 2.0, TOL);
}

#[test]
fn p4_at_every_eigenvalue() {
    let r = sqrt13();
    let want = [
        39.0 / 646.0,
        -(39.0 + 21.0 * r) / 646.0,
        78.0 / 323.0,
        -351.0 / 646.0,
        (-39.0 + 21.0 * r) / 646.0,
    ];
    let ps = polys_447();
    let pre = pre_447();
    for (&l, w) in spectrum_447().eigenvalues().iter().zip(want) {
        assert_close(ps.eval(4, l), w, 1e-12);
        assert_close(pre.values_at(l)[4], w, 1e-12);
    }
}

#[test]
fn phi_values() {
    let r = sqrt13();
    let want = [108.0, 1.5 * (13.0 - 7.0 * r), 9.0, -12.0, 1.5 * (13.0 + 7.0 * r)];
    assert_all_close(&phi(spectrum_447().eigenvalues()), &want, 1e-12);
    let m = multiplicities_via_phi(&polys_447(), spectrum_447().eigenvalues()).unwrap();
    assert_all_close(&m, &[1.0, 2.0, 3.0, 1.0, 2.0], 1e-10);
}

#[test]
fn xi_tensor() {
    // ξ_{11}^2 is (ω_1^1)² ⟨x², p_2⟩/‖p_2‖², so it carries γ_2 times the
    // squared leading coefficient over ω_1^1: (9/8)·γ_2
    let s = spectrum_447();
    let xi = xi_from_spectrum(&s, &polys_447()).unwrap();
    assert_close(xi.get(2, 1, 1), 9.0 / 8.0 * 471.0 / 268.0, 1e-10);
    let (alpha, beta, gamma) = xi.recurrence_slices();
    assert_all_close(&alpha, &ALPHA_447.map(frac), 1e-10);
    assert_all_close(&beta, &BETA_447.map(frac), 1e-10);
    assert_all_close(&gamma, &GAMMA_447.map(frac), 1e-10);
    for h in 0..=4 {
        for j in 0..=4 {
            assert_close(xi.get(h, 0, j), if h == j { 1.0 } else { 0.0 }, 1e-10);
        }
    }

    // Petersen by a direct sum over the spectrum
    let pet = petersen_spectrum();
    let ps = polys_from_spectrum(&pet).unwrap();
    let xi = xi_from_spectrum(&pet, &ps).unwrap();
    let direct: f64 = pet
        .pairs()
        .map(|(l, m)| m * ps.eval(1, l).powi(3))
        .sum::<f64>()
        / (10.0 * ps.eval(1, 3.0));
    assert!(xi.get(1, 1, 1).abs() < TOL && direct.abs() < TOL);
}

#[test]
fn preintersection_from_polys_447() {
    let pre = preintersection_from_polys(&polys_447()).unwrap();
    assert_all_close(pre.alpha(), &ALPHA_447.map(frac), 1e-10);
    assert_all_close(pre.beta(), &BETA_447.map(frac), 1e-10);
    assert_all_close(pre.gamma(), &GAMMA_447.map(frac), 1e-10);
    let pre = preintersection_from_polys(&polys_from_spectrum(&k3()).unwrap()).unwrap();
    assert_all_close(pre.alpha(), &[0.0, 1.0], TOL);
    assert_all_close(pre.beta(), &[2.0], TOL);
    assert_all_close(pre.gamma(), &[1.0], TOL);
}

#[test]
fn recurrence_matrices() {
    let r = recurrence_from_omega(&polys_447()).unwrap();
    let m = r.matrix();
    let row0 = [0.0, 8.0 / 9.0, 0.0, 0.0, 0.0];
    let row1 = [3.0, 0.25, 471.0 / 268.0, 0.0, 0.0];
    assert_all_close(m.row(0), &row0, 1e-10);
    assert_all_close(m.row(1), &row1, 1e-10);

    let r = recurrence_from_omega(&k2_polys()).unwrap();
    assert_eq!(r.matrix().to_rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);

    // Petersen is distance-regular, so R is its intersection matrix
    let pet = generators::petersen();
    let (c, a, b) = intersection_array(&pet);
    let (ps, _) = pre_of(&pet);
    let pre = recurrence_from_omega(&ps).unwrap().to_preintersection().unwrap();
    assert_all_close(pre.gamma(), &c, TOL);
    assert_all_close(pre.alpha(), &a, TOL);
    assert_all_close(pre.beta(), &b, TOL);
    assert_eq!((c, a, b), (vec![1.0, 1.0], vec![0.0, 0.0, 2.0], vec![3.0, 2.0]));
}

#[test]
fn leading_coefficients() {
    let lc = leading_coeffs_from_preintersection(&pre_447());
    assert_all_close(&lc.top, &[1.0, 9.0 / 8.0, 201.0 / 314.0, 183.0 / 646.0, 1.0 / 12.0], 1e-12);
    assert_close(lc.second[2], -201.0 / 1256.0, 1e-12);
    assert_close(lc.second[2], omega_447()[2][1], 1e-12);
    for i in 0..=4 {
        assert_close(lc.third[i], if i >= 2 { omega_447()[i][i - 2] } else { 0.0 }, 1e-10);
    }
    let bip = PreintersectionSet::new(vec![0.0; 4], vec![3.0, 2.0, 1.0], vec![1.0, 2.0, 3.0], 3.0).unwrap();
    let lc = leading_coeffs_from_preintersection(&bip);
    assert!(lc.second.iter().all(|&w| w == 0.0));
}

#[test]
fn spectrum_from_polynomials() {
    let ps = polys_447();
    let r = sqrt13();
    let roots = hoffman_roots(&ps).unwrap();
    assert_all_close(&roots, &[(-1.0 + r) / 2.0, 0.0, -1.0, (-1.0 - r) / 2.0], 1e-12);
    assert_close(lambda0_from_omega(&ps), 3.0, 1e-12);
    assert_close(lambda0_from_h(&ps, &roots).unwrap(), 3.0, 1e-10);
    let rec = spectrum_from_polys(&ps).unwrap();
    assert_eq!(rec.spectrum.multiplicities(), &[1, 2, 3, 1, 2]);
    let mut ev = vec![3.0];
    ev.extend(&roots);
    assert_all_close(&multiplicities_from_polys(&ps, &ev).unwrap(), &[1.0, 2.0, 3.0, 1.0, 2.0], 1e-10);

    let k3p = polys_from_spectrum(&k3()).unwrap();
    let rec = spectrum_from_polys(&k3p).unwrap();
    assert_all_close(rec.spectrum.eigenvalues(), &[2.0, -1.0], TOL);
    assert_eq!(rec.spectrum.multiplicities(), &[1, 2]);
    assert_close(lambda0_from_h(&k3p, &[-1.0]).unwrap(), 2.0, TOL);

    assert_close(lambda0_from_h(&k2_polys(), &[-1.0]).unwrap(), 1.0, TOL);
    let pet = polys_from_spectrum(&petersen_spectrum()).unwrap();
    let roots = hoffman_roots(&pet).unwrap();
    assert_close(lambda0_from_h(&pet, &roots).unwrap(), lambda0_from_omega(&pet), 1e-9);
    assert_close(lambda0_from_omega(&pet), 3.0, TOL);
}

#[test]
fn polynomials_from_preintersection() {
    let ps = polys_from_preintersection(&pre_447()).unwrap();
    let want = omega_447();
    assert_all_close(&ps.omega()[3], &want[3], 1e-10);
    let det = polys_via_charpoly(&pre_447()).unwrap();
    assert_all_close(&det.omega()[2], &want[2], 1e-10);
    // p_1 = (x − α_0) / γ_1
    assert_all_close(&det.omega()[1], &[0.0, 9.0 / 8.0], 1e-12);

    // p_2 = (x² − β_0) / γ_2
    let chain = PreintersectionSet::new(vec![0.0; 3], vec![2.0, 1.0], vec![1.0, 2.0], 2.0).unwrap();
    assert_all_close(&polys_from_preintersection(&chain).unwrap().omega()[2], &[-1.0, 0.0, 0.5], TOL);

    let pet = PreintersectionSet::new(vec![0.0, 0.0, 2.0], vec![3.0, 2.0], vec![1.0, 1.0], 3.0).unwrap();
    let a = polys_from_preintersection(&pet).unwrap();
    assert_all_close(&a.omega()[2], &[-3.0, 0.0, 1.0], TOL);
    assert_close(a.eval(2, 3.0), 6.0, TOL);
    let b = polys_via_charpoly(&pet).unwrap();
    for (x, y) in a.omega().iter().zip(b.omega()) {
        assert_all_close(x, y, TOL);
    }
}

#[test]
fn spectrum_from_recurrence_matrix() {
    let pre = pre_447();
    let cp = characteristic_polynomial(pre.recurrence_matrix().matrix());
    // ascending coefficients of x^5 − x^4 − 8x^3 + 3x^2 + 9x
    assert_all_close(&cp, &[0.0, 9.0, 3.0, -8.0, -1.0, 1.0], 1e-10);
    let pairs = recurrence_eigenpairs(&pre).unwrap();
    assert_all_close(&pairs.inner, &[9.0, 4.5, 3.0, 9.0, 4.5], 1e-10);
    let rec = spectrum_from_preintersection(&pre).unwrap();
    assert_eq!(rec.spectrum.multiplicities(), &[1, 2, 3, 1, 2]);
    assert_all_close(rec.spectrum.eigenvalues(), spectrum_447().eigenvalues(), 1e-12);
}

#[test]
fn moment_route() {
    let m = walk_moments(&spectrum_447(), 9);
    let out = preintersection_from_moments(&m, 4, 3.0).unwrap();
    let pre = out.preintersection;
    assert_close(pre.c(1), 8.0 / 9.0, 1e-9);
    assert_close(pre.a(1), 0.25, 1e-9);
    assert_close(pre.b(1), 67.0 / 36.0, 1e-9);
    assert_close(pre.c(2), 471.0 / 268.0, 1e-9);
    assert_close(pre.a(2), 387.0 / 628.0, 1e-9);
    assert_close(pre.b(2), 6588.0 / 10519.0, 1e-9);
    let cf = closed_form_moments(&m, 3.0).unwrap();
    assert_close(cf.gamma1, 8.0 / 9.0, 1e-12);
    assert_close(cf.gamma2, 471.0 / 268.0, 1e-12);
    assert_close(cf.alpha2, 387.0 / 628.0, 1e-12);

    let out = preintersection_from_moments(&walk_moments(&k3(), 3), 1, 2.0).unwrap();
    assert_close(out.preintersection.c(1), 1.0, TOL);
    assert_close(out.preintersection.a(1), 1.0, TOL);
    assert_close(out.preintersection.b(0), 2.0, TOL);
}

#[test]
fn roundtrips() {
    let path = parse_path("sp→poly,poly→pre,pre→sp").unwrap();
    let report = roundtrip_check(&Representation::Spectrum(spectrum_447()), &path, 1e-7).unwrap();
    assert!(report.pass, "{report:?}");
    for p in ["sp→poly,poly→sp", "sp→pre,pre→sp", "sp→pre,pre→poly,poly→sp"] {
        let path = parse_path(p).unwrap();
        assert!(roundtrip_check(&Representation::Spectrum(k3()), &path, 1e-9).unwrap().pass);
    }
    let g = random_graphs(8, 40, 8).into_iter().find(|g| g.n() == 8).unwrap();
    let report = roundtrip_check(&Representation::Spectrum(spectrum(&g)), &path, 1e-6).unwrap();
    assert!(report.pass, "{report:?}");
}

#[test]
fn drg_checks() {
    let report = check_spectral_excess(&generators::petersen(), DEFAULT_CLUSTER_TOL, DEFAULT_DRG_TOL).unwrap();
    assert!(report.is_drg);
    assert_close(report.spectral_excess, 6.0, 1e-9);
    assert_eq!(report.average_excess, 6.0);

    let c6 = generators::cycle(6);
    let report = check_spectral_excess(&c6, DEFAULT_CLUSTER_TOL, DEFAULT_DRG_TOL).unwrap();
    assert!(report.is_drg);
    assert_close(report.spectral_excess, 1.0, 1e-9);
    assert_eq!(report.average_excess, mean_at_distance(&c6, 3));
    assert_eq!(report.average_excess, 1.0);

    // the prism K3 × K2: the verdict follows the computed gap
    let prism = generators::prism(3);
    let report = check_spectral_excess(&prism, DEFAULT_CLUSTER_TOL, DEFAULT_DRG_TOL).unwrap();
    let s = spectrum(&prism);
    assert_close(report.spectral_excess, pi_formula(&s), 1e-9);
    assert_eq!(report.average_excess, mean_at_distance(&prism, s.d()));
    assert_eq!(report.is_drg, report.gap <= DEFAULT_DRG_TOL);
    assert!(!report.is_drg);
}

#[test]
fn bipartite_and_odd_girth() {
    let (c6_ps, c6) = pre_of(&generators::cycle(6));
    assert!(check_bipartite_oddgirth(&c6, PATTERN_TOL).unwrap().bipartite);
    let omega = check_bipartite_omega(&c6_ps, 1e-9);
    assert!(omega.bipartite);
    let pet = generators::petersen();
    let (pet_ps, pet_pre) = pre_of(&pet);
    let v = check_bipartite_oddgirth(&pet_pre, PATTERN_TOL).unwrap();
    assert_eq!(v.odd_girth, Some(5));
    assert_eq!(v.odd_girth, girth_and_odd_girth(&pet).1);
    assert_eq!(check_bipartite_omega(&pet_ps, PATTERN_TOL), v);
    let (_, k3pre) = pre_of(&generators::complete(3));
    assert_eq!(check_bipartite_oddgirth(&k3pre, PATTERN_TOL).unwrap().odd_girth, Some(3));

    assert_eq!(check_bipartite_omega(&polys_447(), PATTERN_TOL).odd_girth, Some(3));
    assert!(!check_bipartite_omega(&polys_447(), PATTERN_TOL).bipartite);
    assert!(check_bipartite_omega(&k2_polys(), PATTERN_TOL).bipartite);
}

#[test]
fn girth_patterns() {
    let pet = generators::petersen();
    let (_, pre) = pre_of(&pet);
    assert_eq!(check_girth_regular(&pre, PATTERN_TOL).unwrap(), Girth::Exact(5));
    assert_eq!(girth_and_odd_girth(&pet).0, Some(5));
    let (_, pre) = pre_of(&generators::cycle(6));
    assert_eq!(check_girth_regular(&pre, PATTERN_TOL).unwrap(), Girth::Exact(6));
    let (_, pre) = pre_of(&generators::complete(3));
    assert_eq!(check_girth_regular(&pre, PATTERN_TOL).unwrap(), Girth::Exact(3));
}

#[test]
fn sufficient_conditions() {
    let (pet_ps, pet) = pre_of(&generators::petersen());
    assert_eq!(check_gamma_sufficient(&pet, false, PATTERN_TOL), Sufficient::Drg);
    assert_eq!(check_monic_sufficient(&pet_ps, false, PATTERN_TOL), Sufficient::Drg);
    assert_eq!(check_gamma_sufficient(&pre_447(), false, PATTERN_TOL), Sufficient::Inconclusive);
    assert_eq!(check_monic_sufficient(&polys_447(), false, PATTERN_TOL), Sufficient::Inconclusive);
    let (c6_ps, c6) = pre_of(&generators::cycle(6));
    assert_eq!(c6.d(), 3);
    assert_eq!(check_gamma_sufficient(&c6, true, PATTERN_TOL), Sufficient::Drg);
    assert_eq!(check_monic_sufficient(&c6_ps, true, PATTERN_TOL), Sufficient::Drg);
    assert_eq!(check_monic_sufficient(&k2_polys(), true, PATTERN_TOL), Sufficient::Drg);
}
