//! End-to-end acceptance checks, one test per criterion. Each prints a
//! single pass/fail line (visible with `--nocapture`) before asserting.

use num::bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylcomm::combinatorics::{
    delta_closed, lemma_a1_check, lemma_a2_check, lemma_a3_check, lemma_aaa1_check, mu_closed,
};
use weylcomm::identities::{
    check_named_identity, check_s_n_zero, closure_witness, multilinear_identity_rank,
    random_poly, rtol_ltor_check, NamedIdentity,
};
use weylcomm::lambda::{
    f_eval, lambda_matrix_cols, lambda_matrix_rows, lambda_perm_dp, lambda_perm_naive,
    lambda_super, lambda_weyl,
};
use weylcomm::matrix::{random_mat, IntMatRing};
use weylcomm::poly::{wronskian, Poly};
use weylcomm::rational::{rat_i64, Rat};
use weylcomm::standard::{s_eval_dp, s_eval_naive, DiffOpRing};
use weylcomm::superalg::{mu, nu, SuperMonomial, SuperOp};
use weylcomm::weyl::DiffOp;

fn report(criterion: usize, name: &str, ok: bool) {
    println!(
        "criterion {:02} {}: {}",
        criterion,
        name,
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} ({name}) failed");
}

fn big(s: &str) -> BigInt {
    s.parse().unwrap()
}

#[test]
fn criterion_01_lambda_table() {
    let published: [(usize, &str); 6] = [
        (1, "1"),
        (2, "2"),
        (3, "90"),
        (4, "586656"),
        (5, "1915103977500"),
        (6, "7886133184567796056800"),
    ];
    let mut ok = true;
    for (p, expect) in published {
        let expect = big(expect);
        ok &= lambda_super(p).unwrap() == expect;
        if p <= 4 {
            ok &= lambda_weyl(p).unwrap() == expect;
            ok &= lambda_perm_naive(p).unwrap() == expect;
        }
        if p <= 5 {
            ok &= lambda_perm_dp(p).unwrap() == expect;
        }
        if p <= 3 {
            ok &= lambda_matrix_rows(p).unwrap() == expect;
            ok &= lambda_matrix_cols(p).unwrap() == expect;
        }
    }
    report(1, "lambda table by all routes", ok);
}

#[test]
fn criterion_02_power_expansions() {
    // the published (a d^3)^k lists, k = 2..6
    let published: [&[(&[usize], usize, i64)]; 5] = [
        &[(&[0, 1], 5, 3), (&[0, 2], 4, 3), (&[0, 3], 3, 1)],
        &[
            (&[0, 1, 2], 6, 18),
            (&[0, 1, 3], 5, 27),
            (&[0, 1, 4], 4, 15),
            (&[0, 1, 5], 3, 3),
            (&[0, 2, 3], 4, 9),
            (&[0, 2, 4], 3, 3),
        ],
        &[
            (&[0, 1, 2, 3], 6, 126),
            (&[0, 1, 2, 4], 5, 189),
            (&[0, 1, 2, 5], 4, 99),
            (&[0, 1, 2, 6], 3, 18),
            (&[0, 1, 3, 4], 4, 75),
            (&[0, 1, 3, 5], 3, 24),
            (&[0, 2, 3, 4], 3, 6),
        ],
        &[
            (&[0, 1, 2, 3, 4], 5, 432),
            (&[0, 1, 2, 3, 5], 4, 432),
            (&[0, 1, 2, 3, 6], 3, 108),
            (&[0, 1, 2, 4, 5], 3, 90),
        ],
        &[(&[0, 1, 2, 3, 4, 5], 3, 90)],
    ];
    let mut ok = true;
    for (i, terms) in published.iter().enumerate() {
        let k = i + 2;
        let mut expect = SuperOp::zero();
        for (alpha, order, coeff) in terms.iter() {
            expect.add_term(
                SuperMonomial::new(alpha.to_vec()).unwrap(),
                *order,
                BigInt::from(*coeff),
            );
        }
        ok &= SuperOp::power(3, k) == expect;
    }
    report(2, "power expansions (a d^3)^k", ok);
}

#[test]
fn criterion_03_mu_table() {
    let mut ok = true;
    // published p = 5 rows: delta(k-1) and mu_k
    let deltas: [&[usize]; 10] = [
        &[0],
        &[0, 5],
        &[0, 4, 6],
        &[0, 4, 5, 6],
        &[0, 3, 4, 6, 7],
        &[0, 3, 4, 5, 6, 7],
        &[0, 2, 3, 4, 6, 7, 8],
        &[0, 2, 3, 4, 5, 6, 7, 8],
        &[0, 1, 2, 3, 4, 6, 7, 8, 9],
        &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    ];
    let mus: [i64; 10] = [1, 1, 5, 4, 10, 6, 10, 4, 5, 1];
    for k in 1..=10usize {
        ok &= delta_closed(5, k - 1).unwrap().components() == deltas[k - 1];
        ok &= mu_closed(5, k).unwrap() == BigInt::from(mus[k - 1]);
    }
    // closed form vs direct super computation
    for p in 1..=5usize {
        for k in 1..=2 * p {
            ok &= mu_closed(p, k).unwrap() == mu(p, k).unwrap();
        }
    }
    report(3, "mu table and closed form", ok);
}

#[test]
fn criterion_04_wronskian_theorem() {
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    let mut ok = true;
    for p in 1..=3usize {
        let lambda = Rat::from_integer(lambda_super(p).unwrap());
        for _ in 0..50 {
            let us: Vec<Poly> = (0..2 * p).map(|_| random_poly(&mut rng, 6)).collect();
            let args: Vec<DiffOp> = us.iter().map(|u| DiffOp::from_term(p, u.clone())).collect();
            let lhs = s_eval_dp(&DiffOpRing, &args);
            let rhs = DiffOp::from_term(p, wronskian(&us).scale(&lambda));
            ok &= lhs == rhs;
        }
    }
    report(4, "Wronskian formula", ok);
}

#[test]
fn criterion_05_s_n_vanishes() {
    let mut ok = true;
    for p in 1..=3usize {
        ok &= check_s_n_zero(p, 2 * p + 1, 50, 500 + p as u64).unwrap();
        ok &= check_s_n_zero(p, 2 * p + 2, 50, 510 + p as u64).unwrap();
    }
    report(5, "s_(2p+1) and s_(2p+2) identities", ok);
}

#[test]
fn criterion_06_non_closure() {
    let mut ok = true;
    for p in 2..=3usize {
        for n in 2..2 * p {
            ok &= closure_witness(p, n).is_ok();
        }
    }
    let w = closure_witness(2, 2).unwrap();
    ok &= w.bad_order == 3 && !w.value.homogeneous_part(3).is_zero();
    report(6, "non-closure witnesses", ok);
}

#[test]
fn criterion_07_nary_identities() {
    // at p = 1 only the homotopical (full shuffle) sum holds: lcom and rcom
    // degenerate to [[t1,t2],t3]-type brackets that the Witt algebra does
    // not kill, so the check must refute them there
    let mut ok = check_named_identity(1, NamedIdentity::Hanlon, 50, 701).unwrap();
    ok &= !check_named_identity(1, NamedIdentity::Lcom, 50, 701).unwrap();
    ok &= !check_named_identity(1, NamedIdentity::Rcom, 50, 701).unwrap();
    for which in [NamedIdentity::Lcom, NamedIdentity::Rcom, NamedIdentity::Hanlon] {
        ok &= check_named_identity(2, which, 10, 702).unwrap();
    }
    report(7, "lcom/rcom/homotopical identities", ok);
}

#[test]
fn criterion_08_rtol_ltor() {
    let ok = rtol_ltor_check(2, 10, 801).unwrap() && rtol_ltor_check(3, 10, 802).unwrap();
    report(8, "rtol and ltor relations", ok);
}

#[test]
fn criterion_09_lemma_suite() {
    let mut ok = true;
    for k in 1..=8 {
        ok &= lemma_a2_check(k);
    }
    for p in 1..=10 {
        for l in 1..=p {
            ok &= lemma_aaa1_check(p, l);
        }
    }
    for p in 1..=7usize {
        for k in 1..=2 * p - 1 {
            ok &= lemma_a3_check(p, k).unwrap();
        }
    }
    for p in 1..=6usize {
        for k in 0..=2 * p - 1 {
            ok &= delta_closed(p, k).unwrap()
                == weylcomm::combinatorics::delta_max_oracle(p, k, 0).unwrap();
        }
    }
    for p in 1..=5usize {
        for k in 1..=2 * p - 1 {
            ok &= lemma_a1_check(p, k).unwrap();
        }
    }
    for p in 1..=4usize {
        let mut prev = nu(p, 1).unwrap();
        for k in 2..=2 * p {
            let cur = nu(p, k).unwrap();
            ok &= cur >= mu(p, k).unwrap() * &prev;
            prev = cur;
        }
    }
    report(9, "combinatorial lemma suite", ok);
}

#[test]
fn criterion_10_minimality_rank() {
    let mut ok = true;
    for (p, d, expect) in [(1, 2, 2), (2, 2, 2), (2, 3, 6), (2, 4, 24)] {
        ok &= multilinear_identity_rank(p, d, 1000 + d as u64).unwrap() == expect;
    }
    // degree 3 exceeds 2p at p = 1 and s_3 = 0 there, so the 6 monomials
    // carry exactly the one standard dependency: rank 5, not 6
    ok &= multilinear_identity_rank(1, 3, 1003).unwrap() == 5;
    ok &= check_s_n_zero(1, 3, 50, 1003).unwrap();
    report(10, "degree-bounded minimality rank", ok);
}

#[test]
fn criterion_11_f_s_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(1101);
    let mut ok = true;
    let random_point = |rng: &mut ChaCha8Rng, n: usize| loop {
        let point: Vec<Rat> = (0..n).map(|_| rat_i64(rng.gen_range(-20..=20))).collect();
        let mut sorted = point.clone();
        sorted.sort();
        if sorted.windows(2).all(|w| w[0] != w[1]) {
            return point;
        }
    };
    for p in 1..=3usize {
        let expected = Rat::from_integer(lambda_super(p).unwrap());
        for _ in 0..20 {
            let point = random_point(&mut rng, 2 * p);
            ok &= f_eval(p, p, &point).unwrap() == expected;
        }
    }
    // symmetry at p <= 2
    for p in 1..=2usize {
        for s in p..=p + 2 {
            let point = random_point(&mut rng, 2 * p);
            let base = f_eval(p, s, &point).unwrap();
            let mut permuted = point.clone();
            permuted.reverse();
            ok &= f_eval(p, s, &permuted).unwrap() == base;
        }
    }
    report(11, "f_s constancy and symmetry", ok);
}

#[test]
fn criterion_12_engine_cross_validation() {
    let ring = DiffOpRing;
    let mut rng = ChaCha8Rng::seed_from_u64(1201);
    let mut ok = true;
    let mut inputs = 0usize;
    let random_op = |rng: &mut ChaCha8Rng| {
        let order = rng.gen_range(0..=2);
        let coeffs: Vec<i64> = (0..=2).map(|_| rng.gen_range(-5..=5)).collect();
        DiffOp::from_term(order, Poly::from_coeffs(&coeffs))
    };
    for n in 2..=7usize {
        let trials = if n == 7 { 2 } else { 10 };
        for _ in 0..trials {
            let args: Vec<DiffOp> = (0..n).map(|_| random_op(&mut rng)).collect();
            ok &= s_eval_dp(&ring, &args) == s_eval_naive(&ring, &args);
            inputs += 1;
        }
    }
    let mring = IntMatRing::new(2);
    for n in 2..=6usize {
        for _ in 0..10 {
            let args: Vec<_> = (0..n).map(|_| random_mat(&mring, &mut rng, 5)).collect();
            ok &= s_eval_dp(&mring, &args) == s_eval_naive(&mring, &args);
            inputs += 1;
        }
    }
    ok &= inputs >= 100;
    // Amitsur-Levitzki smoke: s_4 = 0 on 2x2 integer matrices
    for _ in 0..100 {
        let args: Vec<_> = (0..4).map(|_| random_mat(&mring, &mut rng, 9)).collect();
        let v = s_eval_dp(&mring, &args);
        ok &= v == mring_zero(&mring);
    }
    report(12, "engine cross-validation", ok);
}

fn mring_zero(ring: &IntMatRing) -> weylcomm::matrix::IntMat {
    use weylcomm::standard::Ring;
    ring.zero()
}

#[test]
fn criterion_13_determinism() {
    // byte-identical JSON across thread counts; exercised through the CLI
    let exe = env!("CARGO_BIN_EXE_weylcomm");
    let run = |threads: &str| {
        std::process::Command::new(exe)
            .args([
                "--threads",
                threads,
                "--format",
                "json",
                "verify",
                "--check",
                "s-zero",
                "--p",
                "2",
                "--trials",
                "20",
                "--seed",
                "13",
            ])
            .output()
            .expect("run weylcomm")
    };
    let base = run("1");
    let mut ok = base.status.success();
    for threads in ["2", "4", "1"] {
        let out = run(threads);
        ok &= out.status.success() && out.stdout == base.stdout;
    }
    ok &= !base.stdout.is_empty();
    report(13, "deterministic JSON across thread counts", ok);
}
