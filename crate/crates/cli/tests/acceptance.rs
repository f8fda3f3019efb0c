//! Acceptance criteria, one line each.
//!
//! Two criteria are red on purpose and stay red: the published d = 2
//! evidence row for the weights -3,-2,2,5,6 lists a class `3+6Z` with two
//! members, but `-3` is the only weight congruent to 3 mod 6. Criterion 1
//! carries that row and the paper report (criterion 7) reproduces it. The
//! process still exits 0 when the red criteria fail in exactly that way and
//! every other check passes; any other failure exits 1.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use udenom::binary_forms::{divides_check, dixmier_closed, sl2_udenom_via_torus, BinaryFormsCase};
use udenom::molien::{
    alt_denom_closed, alt_hilbert_closed, molien_of, udenom_from_classes, EigenEntry, Family, GroupClasses, GroupSpec,
    Permutation, RootMultiset, DEFAULT_GROUP_BOUND,
};
use udenom::torus::{rank1_evidence, torus_udenom_general, torus_udenom_rank1, WeightSystem, DEFAULT_SUBSET_BOUND};
use udenom::{cyclotomic, factor_one_minus, reduce_rational, CycloFactored, DegreeVector, RationalFn, SparsePoly};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, detail: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            if !self.detail.is_empty() {
                self.detail.push_str("; ");
            }
            self.detail.push_str(&what.into());
        }
    }
}

fn fac(s: &str) -> CycloFactored {
    s.parse().unwrap()
}

fn family(f: Family) -> GroupClasses {
    GroupSpec::Family(f).classes(DEFAULT_GROUP_BOUND).unwrap()
}

fn perm_group(n: usize, gens: &[&[usize]]) -> GroupClasses {
    let generators = gens.iter().map(|g| Permutation::from_one_line(g).unwrap()).collect();
    GroupSpec::Permutation { n, generators }.classes(DEFAULT_GROUP_BOUND).unwrap()
}

/// Rotations of the plane by multiples of `2 pi / order`.
fn rotation_group(order: u64) -> GroupClasses {
    let els = (0..order).map(|j| {
        let e = |num| EigenEntry { num, den: order, mult: 1 };
        (RootMultiset::from_entries(&[e(j as i64), e(-(j as i64))]).unwrap(), 1)
    });
    GroupClasses::new(els).unwrap()
}

/// `x -> -x` on a line.
fn sign_group() -> GroupClasses {
    let minus = RootMultiset::from_entries(&[EigenEntry { num: 1, den: 2, mult: 1 }]).unwrap();
    GroupClasses::new([(RootMultiset::identity(1), 1), (minus, 1)]).unwrap()
}

const PAPER_WEIGHTS: [i64; 5] = [-3, -2, 2, 5, 6];

fn c1_torus_example(o: &mut Outcome) {
    let expect = fac("phi_1^4 * phi_2^2 * phi_3 * phi_4 * phi_5 * phi_7 * phi_8");
    let ws = WeightSystem::rank_one(&PAPER_WEIGHTS).unwrap();
    let general = torus_udenom_general(&ws, DEFAULT_SUBSET_BOUND).unwrap();
    o.check(general == expect, format!("general gave {general}"));
    let fast = torus_udenom_rank1(&PAPER_WEIGHTS);
    o.check(fast == expect, format!("fast path gave {fast}"));

    let rows = rank1_evidence(&PAPER_WEIGHTS);
    let d2 = rows.iter().find(|r| r.d == 2).unwrap();
    let sizes: Vec<usize> = d2.classes.iter().map(|c| c.count).collect();
    o.check(sizes == [2, 3, 2], format!("d=2 class sizes {sizes:?}, published [2, 3, 2] ({d2})"));
    let d6 = rows.iter().find(|r| r.d == 6).unwrap();
    o.check(d6.classes.is_empty() && d6.exponent == 0, format!("d=6 row {d6}"));
}

fn c2_symmetric(o: &mut Outcome) {
    for n in 2..=12u32 {
        let u = udenom_from_classes(&family(Family::symmetric(n))).unwrap();
        let want = CycloFactored::one_minus_powers(1..=n as u64).unwrap();
        o.check(u == want, format!("S_{n}: {u}"));
    }
    // a second enumeration route, element by element from generators
    for n in 2..=7usize {
        let mut cycle: Vec<usize> = (2..=n).collect();
        cycle.push(1);
        let mut swap: Vec<usize> = (1..=n).collect();
        swap.swap(0, 1);
        let u = udenom_from_classes(&perm_group(n, &[&swap, &cycle])).unwrap();
        let want = CycloFactored::one_minus_powers(1..=n as u64).unwrap();
        o.check(u == want, format!("S_{n} from generators: {u}"));
    }
}

fn c3_alternating_ten(o: &mut Outcome) {
    let a10 = fac("phi_1^10 * phi_2^4 * phi_3^3 * phi_4^2 * phi_5^2 * phi_6 * phi_7 * phi_8 * phi_9");
    let u = udenom_from_classes(&family(Family::alternating(10))).unwrap();
    o.check(u == a10, format!("enumerated {u}"));
    let denom = alt_denom_closed(10).unwrap();
    let want = fac("phi_1^10 * phi_2^4 * phi_3^3 * phi_4^2 * phi_5^2 * phi_7 * phi_8 * phi_9");
    o.check(denom == want, format!("closed denominator {denom}"));
    let gap = u.ratio(&denom);
    o.check(gap.to_string() == "phi_6", format!("gap {gap}"));
    let h = alt_hilbert_closed(10).unwrap();
    o.check(h.denominator == denom, format!("reduced closed series {h}"));
}

fn c4_molien(o: &mut Outcome) {
    for n in 2..=8u32 {
        let g = family(Family::symmetric(n));
        let h = molien_of(&g).unwrap();
        let want = RationalFn::reciprocal_of(CycloFactored::one_minus_powers(1..=n as u64).unwrap());
        o.check(h == want, format!("S_{n}: {h}"));
        o.check(h.denominator.divides(&udenom_from_classes(&g).unwrap()), format!("S_{n} divisibility"));
    }
    for n in 3..=8u32 {
        let g = family(Family::alternating(n));
        let h = molien_of(&g).unwrap();
        let closed = alt_hilbert_closed(n).unwrap();
        o.check(h == closed, format!("A_{n}: {h} vs {closed}"));
        let disc = (n * (n - 1) / 2) as usize;
        let mut top = vec![BigInt::from(0); disc + 1];
        top[0] = BigInt::from(1);
        top[disc] = BigInt::from(1);
        let raw = RationalFn::new(SparsePoly::from_dense(&top), CycloFactored::one_minus_powers(1..=n as u64).unwrap());
        o.check(h.same_function(&raw).unwrap(), format!("A_{n} differs from (1+t^{disc})/prod"));
        o.check(h.denominator.divides(&udenom_from_classes(&g).unwrap()), format!("A_{n} divisibility"));
    }
    for (name, g) in test_groups() {
        let h = molien_of(&g).unwrap();
        o.check(h.denominator.divides(&udenom_from_classes(&g).unwrap()), format!("{name} divisibility"));
    }
}

fn c5_binary_forms(o: &mut Outcome) {
    for n in 3..=16 {
        let via = sl2_udenom_via_torus(n).unwrap();
        let closed = dixmier_closed(n).unwrap();
        o.check(via == closed, format!("n={n}: {via} vs {closed}"));
        o.check(divides_check(n).unwrap(), format!("n={n}: does not divide the torus denominator"));
        let torus = BinaryFormsCase::new(n).unwrap().torus_udenom();
        o.check(via.iter().all(|(k, e)| e <= torus.exponent(k)), format!("n={n}: exponentwise"));
    }
}

fn test_groups() -> Vec<(String, GroupClasses)> {
    vec![
        ("C2 on K^2".into(), perm_group(2, &[&[2, 1]])),
        ("C3 on K^3".into(), perm_group(3, &[&[2, 3, 1]])),
        ("C4 on K^4".into(), perm_group(4, &[&[2, 3, 4, 1]])),
        ("D4 on K^4".into(), perm_group(4, &[&[2, 3, 4, 1], &[4, 3, 2, 1]])),
        ("S3".into(), family(Family::symmetric(3))),
        ("A4".into(), family(Family::alternating(4))),
        ("S4".into(), family(Family::symmetric(4))),
        ("sign on K".into(), sign_group()),
        ("C3 rotations of K^2".into(), rotation_group(3)),
        ("C4 rotations of K^2".into(), rotation_group(4)),
        ("C6 rotations of K^2".into(), rotation_group(6)),
    ]
}

fn random_factored(rng: &mut StdRng) -> CycloFactored {
    let k = rng.gen_range(0..6);
    CycloFactored::from_orders((0..k).map(|_| (rng.gen_range(1..=20), rng.gen_range(0..4)))).unwrap()
}

fn c6_properties(o: &mut Outcome) {
    // cyclotomic round trips
    for k in 1..=60u64 {
        let f = factor_one_minus(&DegreeVector::scalar(k)).unwrap();
        let dense = f.expand_dense_with(&udenom::ExactCyclo).unwrap();
        let mut want = vec![BigInt::from(0); k as usize + 1];
        want[0] = BigInt::from(1);
        want[k as usize] = BigInt::from(-1);
        o.check(dense == want, format!("1-t^{k} does not expand back"));
        let phi = cyclotomic(k);
        o.check(phi[0] == BigInt::from(1), format!("phi_{k}(0) != 1"));
        let back =
            reduce_rational(&SparsePoly::from_dense(&phi), &CycloFactored::from_orders([(k, 1)]).unwrap()).unwrap();
        o.check(back == RationalFn::new(SparsePoly::one(1), CycloFactored::one()), format!("phi_{k}/phi_{k} != 1"));
    }

    let mut rng = StdRng::seed_from_u64(20241019);
    for _ in 0..500 {
        let (a, b, c) = (random_factored(&mut rng), random_factored(&mut rng), random_factored(&mut rng));
        let laws = a.gcd(&b).mul(&a.lcm(&b)) == a.mul(&b)
            && a.lcm(&b) == b.lcm(&a)
            && a.gcd(&b) == b.gcd(&a)
            && a.lcm(&b.lcm(&c)) == a.lcm(&b).lcm(&c)
            && a.gcd(&b.gcd(&c)) == a.gcd(&b).gcd(&c)
            && a.lcm(&a.gcd(&b)) == a
            && a.gcd(&a.lcm(&b)) == a
            && a.divides(&a.lcm(&b))
            && a.gcd(&b).divides(&b);
        o.check(laws, format!("lattice laws fail for {a}, {b}, {c}"));
    }

    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-6..=6)).collect();
        let ws = WeightSystem::rank_one(&w).unwrap();
        let g = torus_udenom_general(&ws, DEFAULT_SUBSET_BOUND).unwrap();
        o.check(g == torus_udenom_rank1(&w), format!("torus paths differ on {w:?}"));
    }

    // every enumerated group must pass the Galois stability check
    let mut groups = test_groups();
    groups.extend((2..=12).map(|n| (format!("S_{n}"), family(Family::symmetric(n)))));
    groups.extend((3..=10).map(|n| (format!("A_{n}"), family(Family::alternating(n)))));
    for (name, g) in &groups {
        o.check(udenom_from_classes(g).is_ok(), format!("{name} rejected as Galois-unstable"));
    }
    let lopsided = GroupClasses::new([
        (RootMultiset::identity(1), 1),
        (RootMultiset::from_entries(&[EigenEntry { num: 1, den: 3, mult: 1 }]).unwrap(), 1),
    ])
    .unwrap();
    o.check(udenom_from_classes(&lopsided).is_err(), "unstable multiset accepted");

    let small = test_groups();
    for (na, a) in &small {
        for (nb, b) in &small {
            let p = a.product(b).unwrap();
            let u = udenom_from_classes(&p).unwrap();
            let want = udenom_from_classes(a).unwrap().mul(&udenom_from_classes(b).unwrap());
            o.check(u == want, format!("udenom({na} x {nb}) = {u}"));
            if a.order * b.order <= 96 {
                let (ha, hb) = (molien_of(a).unwrap(), molien_of(b).unwrap());
                let prod = RationalFn::new(&ha.numerator * &hb.numerator, ha.denominator.mul(&hb.denominator));
                let hp = molien_of(&p).unwrap();
                o.check(hp.same_function(&prod).unwrap(), format!("H({na} x {nb}) not multiplicative"));
            }
        }
    }

    for _ in 0..200 {
        let len = rng.gen_range(1..10);
        let coeffs: Vec<BigInt> = (0..len).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect();
        let num = SparsePoly::from_dense(&coeffs);
        let den = random_factored(&mut rng);
        let r = reduce_rational(&num, &den).unwrap();
        let lhs = &r.numerator * &den.expand().unwrap();
        let rhs = &num * &r.denominator.expand().unwrap();
        o.check(lhs == rhs, format!("cross-multiplication fails for ({num}) / ({den})"));
        o.check(r.denominator.divides(&den), format!("reduction grew the denominator of ({num}) / ({den})"));
    }
}

fn c7_paper_report(o: &mut Outcome) {
    let out = Command::new(env!("CARGO_BIN_EXE_udenom")).arg("paper-report").output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let failing: Vec<&str> =
        text.lines().filter_map(|l| l.strip_prefix("[FAIL] ")).map(|l| l.split(':').next().unwrap_or(l)).collect();
    o.check(out.status.success(), format!("failing items {failing:?}, exit {:?}", out.status.code()));
}

/// Criteria expected to fail, with the only sub-checks allowed to fail.
const KNOWN_RED: [(u32, &str); 2] = [
    (1, "d=2 class sizes [2, 3], published [2, 3, 2]"),
    (7, r#"failing items ["torus-evidence-d2", "cli-torus-evidence"]"#),
];

type Criterion = (u32, &'static str, Duration, fn(&mut Outcome));

fn main() {
    let criteria: [Criterion; 7] = [
        (1, "worked torus example, both algorithms and evidence table", Duration::from_secs(1), c1_torus_example),
        (2, "symmetric groups n = 2..12 match prod (1-t^k)", Duration::from_secs(5), c2_symmetric),
        (3, "A_10 udenom, closed denominator and phi_6 gap", Duration::from_secs(10), c3_alternating_ten),
        (4, "Molien series of S_n and A_n, n <= 8, and divisibility", Duration::from_secs(10), c4_molien),
        (5, "binary forms n = 3..16 against Dixmier products", Duration::from_secs(5), c5_binary_forms),
        (6, "property suites", Duration::from_secs(60), c6_properties),
        (7, "paper-report exits 0", Duration::from_secs(30), c7_paper_report),
    ];

    let mut unexpected = Vec::new();
    for (id, title, budget, run) in criteria {
        let mut o = Outcome::new();
        let start = Instant::now();
        run(&mut o);
        let took = start.elapsed();
        o.check(took <= budget, format!("took {took:.2?}, budget {budget:?}"));
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{tag} [{id}] {title} ({:.3} s){}",
            took.as_secs_f64(),
            if o.pass { String::new() } else { format!(": {}", o.detail) }
        );

        let known = KNOWN_RED.iter().find(|(k, _)| *k == id);
        match (o.pass, known) {
            (true, None) => {}
            (false, Some((_, why))) if o.detail.starts_with(why) && !o.detail.contains("; ") => {}
            (true, Some(_)) => unexpected.push(format!("[{id}] passed but is recorded as failing")),
            (false, _) => unexpected.push(format!("[{id}] {}", o.detail)),
        }
    }

    if unexpected.is_empty() {
        println!("acceptance: all criteria behave as recorded");
    } else {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        std::process::exit(1);
    }
}
