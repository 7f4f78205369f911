//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines come out in order; exits non-zero if any fails.

mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use neutromagma::classify::{
    cauchy_classify, detect_s_kind, lagrange_classify, sylow_classify, SKind, SylowVariant, Verdict3,
};
use neutromagma::constructors::{
    dihedral, ln, ln_class, ln_multipliers, zmod_mult, zn_class_members, zn_star, ZnClass,
};
use neutromagma::corpus::{self, coset_cases, order_31_n_semigroup, printed_tables, table_mismatch, Status};
use neutromagma::laws::{check_identity_law, IdentityLaw};
use neutromagma::neutro::{extend_tagged, zn_full_neutro, zn_line_neutro, zn_line_neutro_nonzero};
use neutromagma::nstruct::{enumerate_n_substructures, n_cauchy, n_lagrange, n_sylow, NStructure};
use neutromagma::ops::{conjugate_pair, conjugate_witnesses, is_ideal, is_normal, IdealSide, NormalMode, NormalRange};
use neutromagma::search::{closed_subsets, enumerate_closed_subsets, SearchLimits};
use neutromagma::species::SubsetPredicate;
use neutromagma::{FiniteMagma, Result, Subset};

struct Report {
    ok: bool,
    detail: String,
}

fn report(ok: bool, detail: impl Into<String>) -> Result<Report> {
    Ok(Report { ok, detail: detail.into() })
}

fn holds(m: &FiniteMagma, law: IdentityLaw) -> bool {
    check_identity_law(m, law, None).expect("law check").holds
}

fn verdicts(reports: &[(&str, Verdict3)]) -> String {
    reports.iter().map(|(k, v)| format!("{k} {}", v.name())).collect::<Vec<_>>().join(", ")
}

fn c1_table_fidelity() -> Result<Report> {
    let mut bad = Vec::new();
    let tables = printed_tables()?;
    for t in &tables {
        if let Some(d) = table_mismatch(&t.magma, t.text)? {
            bad.push(format!("{}: {d}", t.name));
        }
    }
    report(bad.is_empty(), format!("{} tables, mismatches {bad:?}", tables.len()))
}

fn factor_formula(mut n: u64) -> u64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out *= (p - 2) * p.pow(a - 1);
        }
        p += 1;
    }
    if n > 1 {
        out *= n - 2;
    }
    out
}

fn c2_loop_class_counting() -> Result<Report> {
    let mut bad = Vec::new();
    let mut classes = 0;
    for n in (5..=51).step_by(2) {
        let class = ln_class(n)?;
        let want = factor_formula(n);
        let comm: Vec<u64> = ln_multipliers(n)
            .into_iter()
            .filter(|&m| {
                let g = ln(n, m).unwrap();
                g.elements().all(|x| g.elements().all(|y| g.op(x, y) == g.op(y, x)))
            })
            .collect();
        if class.len() as u64 != want || comm != [(n + 1) / 2] {
            bad.push(format!("n={n}: |class| {} vs {want}, commutative {comm:?}", class.len()));
        }
        classes += 1;
    }
    report(bad.is_empty(), format!("{classes} odd n in 5..=51, failures {bad:?}"))
}

fn c3_alternative_moufang_sweep() -> Result<Report> {
    use IdentityLaw::*;
    let mut bad = Vec::new();
    let mut members = 0;
    for n in [5, 7, 9, 15] {
        let (mut right, mut left) = (Vec::new(), Vec::new());
        for m in ln_multipliers(n) {
            let g = ln(n, m)?;
            members += 1;
            if holds(&g, RightAlternative) {
                right.push(m);
            }
            if holds(&g, LeftAlternative) {
                left.push(m);
            }
            for law in [Moufang1, Moufang2, Moufang3, Bol, BruckIdentity] {
                if holds(&g, law) {
                    bad.push(format!("L{n}({m}) satisfies {}", law.name()));
                }
            }
        }
        if right != [2] || left != [n - 1] {
            bad.push(format!("n={n}: right-alternative {right:?}, left-alternative {left:?}"));
        }
    }
    report(bad.is_empty(), format!("{members} members, failures {bad:?}"))
}

fn c4_wip() -> Result<Report> {
    let mut bad = Vec::new();
    let mut checked = 0;
    let mut wip = 0;
    for n in 1..=25u64 {
        for m in ln_multipliers(n) {
            let g = ln(n, m)?;
            let got = holds(&g, IdentityLaw::WIP);
            let want = (m * m - m + 1) % n == 0;
            checked += 1;
            wip += got as usize;
            if got != want {
                bad.push(format!("L{n}({m}): engine {got}, congruence {want}"));
            }
        }
    }
    report(bad.is_empty(), format!("{checked} loops, {wip} WIP, disagreements {bad:?}"))
}

fn normal_subgroupoids(g: &FiniteMagma) -> Result<Vec<Subset>> {
    let mut out = Vec::new();
    for h in closed_subsets(g, SearchLimits::default())?.subsets {
        if is_normal(g, &h, NormalMode::Subgroupoid(NormalRange::Whole))? {
            out.push(h);
        }
    }
    Ok(out)
}

fn c5_groupoid_theorems() -> Result<Report> {
    let mut bad = Vec::new();
    let mut groupoids = 0;
    for n in 3..=12u64 {
        let pairs = zn_class_members(n, ZnClass::Zstar);
        let mut count = 0;
        for t in 1..n {
            for u in 1..n {
                count += (t != u) as u64;
            }
        }
        if pairs.len() as u64 != count || count != (n - 1) * (n - 2) {
            bad.push(format!("n={n}: {} members, {count} counted", pairs.len()));
        }
        for &(t, u) in &pairs {
            let g = zn_star(n, t, u)?;
            groupoids += 1;
            let assoc = holds(&g, IdentityLaw::Associative);
            if assoc != ((t * t) % n == t && (u * u) % n == u) {
                bad.push(format!("Z{n}({t},{u}) associative {assoc}"));
            }
            let idem = holds(&g, IdentityLaw::Idempotent);
            if idem != ((t + u) % n == 1) {
                bad.push(format!("Z{n}({t},{u}) idempotent {idem}"));
            }
            if n <= 10 {
                let dual = zn_star(n, u, t)?;
                let left = enumerate_closed_subsets(&g, &SubsetPredicate::IsLeftIdeal, SearchLimits::default())?;
                let right = enumerate_closed_subsets(&dual, &SubsetPredicate::IsRightIdeal, SearchLimits::default())?;
                if left.subsets != right.subsets {
                    bad.push(format!("Z{n}({t},{u}) left ideals differ from right ideals of Z{n}({u},{t})"));
                }
            }
        }
    }
    for (n, t, u) in [(5, 2, 3), (7, 2, 5), (13, 2, 11)] {
        let normal = normal_subgroupoids(&zn_star(n, t, u)?)?;
        if !normal.is_empty() {
            bad.push(format!("Z{n}({t},{u}) has normal subgroupoids {normal:?}"));
        }
    }
    report(bad.is_empty(), format!("{groupoids} groupoids, n in 3..=12, failures {bad:?}"))
}

fn c6_neutrosophic_doubling() -> Result<Report> {
    let mut bad = Vec::new();
    let mut members = 0;
    for n in (5..=15).step_by(2) {
        for m in ln_multipliers(n) {
            let g = extend_tagged(&ln(n, m)?)?;
            members += 1;
            if g.order() as u64 != 2 * (n + 1) {
                bad.push(format!("L{n}({m}): order {}", g.order()));
            }
            let e = g.idx("e")?;
            let ei = g.idx("eI")?;
            for t in 1..=n {
                let x = g.idx(&t.to_string())?;
                let xi = g.idx(&format!("{t}I"))?;
                let order = [e, x, ei, xi];
                let table = [[e, x, ei, xi], [x, e, xi, ei], [ei, xi, ei, xi], [xi, ei, xi, ei]];
                for (r, &a) in order.iter().enumerate() {
                    for (c, &b) in order.iter().enumerate() {
                        if g.op(a, b) != table[r][c] {
                            bad.push(format!("L{n}({m}), t={t}: {}·{} = {}", g.label(a), g.label(b), g.label(g.op(a, b))));
                        }
                    }
                }
            }
            if !detect_s_kind(&g, SKind::SNeutrosophicLoop)?.holds {
                bad.push(format!("L{n}({m}) not detected as S-neutrosophic loop"));
            }
        }
    }
    report(bad.is_empty(), format!("{members} tagged loops, failures {bad:?}"))
}

fn c7_coset_corpus() -> Result<Report> {
    let (m, cases) = coset_cases()?;
    let bad: Vec<String> = cases
        .iter()
        .filter(|c| c.computed != c.printed)
        .map(|c| format!("{}{} printed {} computed {}", c.family, c.by, m.show(&c.printed), m.show(&c.computed)))
        .collect();
    report(bad.is_empty(), format!("{} printed cosets, {} differ: {bad:?}", cases.len(), bad.len()))
}

fn c8_conjugacy_corpus() -> Result<Report> {
    let g = zn_full_neutro(15)?;
    let w = conjugate_witnesses(&g, &g.subset(&["1", "4"])?, &g.subset(&["1", "14"])?)?;
    let got = Subset::new(w.iter().map(|c| c.element));
    let want = g.subset(&["0", "3", "6", "9", "12", "3I", "6I", "9I", "12I"])?;
    let h = zn_full_neutro(6)?;
    let pair = conjugate_pair(&h, h.idx("3")?, h.idx("5")?).map(|(a, b)| (h.label(a).to_string(), h.label(b).to_string()));
    let pair_ok = pair == Some(("1".to_string(), "3".to_string()));
    report(
        got == want && pair_ok,
        format!(
            "conjugating set in zn_full_neutro(15) has {} elements (expected 9): {}; least pair for (3,5) is {pair:?} (expected (1,3))",
            got.len(),
            g.show(&got)
        ),
    )
}

fn orders(r: &neutromagma::classify::ClassReport) -> Vec<usize> {
    let mut o: Vec<usize> = r.witnesses.iter().map(|w| w.order).collect();
    o.sort_unstable();
    o.dedup();
    o
}

fn c9_engine_corpus() -> Result<Report> {
    use SubsetPredicate::*;
    let mut parts = Vec::new();
    let mut ok = true;

    let g = extend_tagged(&ln(15, 2)?)?;
    let r = lagrange_classify(&g, &IsSNeutrosophicSubloop)?;
    let os = orders(&r);
    let a = r.verdict == Verdict3::Weak && os.contains(&4) && os.contains(&12) && g.order() == 32;
    parts.push(format!("tagged L15(2) lagrange {} {os:?}", r.verdict.name()));
    ok &= a;

    let g = zn_line_neutro(8)?;
    let r = sylow_classify(&g, &IsSNeutrosophicSub, SylowVariant::Standard)?;
    let os = orders(&r);
    let b = r.verdict == Verdict3::Weak && os.contains(&5) && !os.contains(&3);
    parts.push(format!("line Z8 sylow {} {os:?}", r.verdict.name()));
    ok &= b;

    let ns = NStructure::build_named(
        "G",
        vec![zn_line_neutro_nonzero(5)?, zmod_mult(10)?, zn_line_neutro(4)?],
        &["neutrosophic-group", "s-semigroup", "neutrosophic-semigroup"],
    )?;
    let c0 = ns.component(0);
    let four_i = c0.idx("4I")?;
    let sq = c0.label(c0.op(four_i, four_i)).to_string();
    let r = n_cauchy(&ns)?;
    let w = r
        .witnesses
        .iter()
        .find(|w| w.members == [ns.offset(0) + four_i] && w.flavor.as_deref() == Some("neutro"));
    let c = ns.order() == 25 && sq == "I" && matches!(w, Some(w) if w.order == 2 && !w.qualifies);
    parts.push(format!("N-cauchy (4I)² = {sq}, o = {}", ns.order()));
    ok &= c;

    let ns = NStructure::build_named(
        "G",
        vec![zn_line_neutro_nonzero(5)?, zn_full_neutro(4)?, zmod_mult(12)?],
        &["neutrosophic-group", "neutrosophic-semigroup", "s-semigroup"],
    )?;
    let r = n_sylow(&ns, &[IsNeutrosophicSubmonoid, IsSSemigroup, IsSSemigroup], SylowVariant::Standard, true)?;
    let os = orders(&r);
    let d = ns.order() == 36 && r.verdict == Verdict3::Weak && os.contains(&9) && !os.contains(&4);
    parts.push(format!("N-sylow o = 36 {} {os:?}", r.verdict.name()));
    ok &= d;

    let ns = NStructure::build_named(
        "B",
        vec![extend_tagged(&ln(7, 3)?)?, dihedral(4)?],
        &["s-neutrosophic-loop", "group"],
    )?;
    let r = n_cauchy(&ns)?;
    let e = ns.order() == 24 && r.verdict == Verdict3::Full;
    parts.push(format!("bistructure cauchy {} at o = {}", r.verdict.name(), ns.order()));
    ok &= e;

    let ns = NStructure::build_named(
        "B",
        vec![zn_line_neutro_nonzero(5)?, zn_line_neutro(4)?],
        &["neutrosophic-group", "s-neutrosophic-semigroup"],
    )?;
    let h = ns.subset(&[&["1", "I"], &["0", "2", "2I"]])?;
    let en = enumerate_n_substructures(&ns, &[IsNeutrosophicSemigroup, IsNeutrosophicSemigroup], true)?;
    let f = ns.order() == 15 && h.order() == 5 && en.subsets.contains(&h);
    parts.push(format!("sub-bigroup o(H) = {} in o = {}", h.order(), ns.order()));
    ok &= f;

    report(ok, parts.join("; "))
}

fn free_or_vacuous(v: Verdict3) -> bool {
    matches!(v, Verdict3::Free | Verdict3::Vacuous)
}

fn c10_prime_order() -> Result<Report> {
    use SubsetPredicate::*;
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, g) in [("zn_line_neutro(6)", zn_line_neutro(6)?), ("zn_line_neutro(7)", zn_line_neutro(7)?)] {
        let l = lagrange_classify(&g, &IsSNeutrosophicSub)?.verdict;
        let s = sylow_classify(&g, &IsSNeutrosophicSub, SylowVariant::Standard)?.verdict;
        let c = cauchy_classify(&g, None)?.verdict;
        ok &= [l, s, c].into_iter().all(free_or_vacuous) && neutromagma::constructors::is_prime(g.order() as u64);
        parts.push(format!("{name} o = {}: {}", g.order(), verdicts(&[("lagrange", l), ("sylow", s), ("cauchy", c)])));
    }
    let ns = order_31_n_semigroup()?;
    let species = [IsSSemigroup, IsSNeutrosophicSub, IsSSemigroup];
    let l = n_lagrange(&ns, &species, true)?.verdict;
    let s = n_sylow(&ns, &species, SylowVariant::Standard, true)?.verdict;
    let c = n_cauchy(&ns)?.verdict;
    ok &= [l, s, c].into_iter().all(free_or_vacuous) && ns.order() == 31;
    parts.push(format!("N-structure o = {}: {}", ns.order(), verdicts(&[("lagrange", l), ("sylow", s), ("cauchy", c)])));
    report(ok, parts.join("; "))
}

fn c11_oracle_equivalence() -> Result<Report> {
    let mut r = support::rng(0x5eed);
    let mut checks = 0usize;
    let mut bad = Vec::new();
    for i in 0..50 {
        let t = support::random_table(&mut r, 6);
        let m = t.magma();
        let all_subsets: Vec<Vec<usize>> = (1u32..1 << t.n).map(|mask| support::members(mask, t.n)).collect();

        for &name in support::ORACLE_SPECIES {
            let sp = SubsetPredicate::parse(name).expect("species name");
            let got: Vec<Vec<usize>> = enumerate_closed_subsets(&m, &sp, SearchLimits::default())?
                .subsets
                .into_iter()
                .map(Subset::into_members)
                .collect();
            checks += 1;
            if got != support::enumerate(&t, name) {
                bad.push(format!("magma {i}: enumerate {name}"));
            }
        }

        for s in &all_subsets {
            let sub = Subset::new(s.iter().copied());
            for (side, l, rt) in [(IdealSide::Left, true, false), (IdealSide::Right, false, true), (IdealSide::TwoSided, true, true)] {
                checks += 1;
                if is_ideal(&m, &sub, side) != support::ideal(&t, s, l, rt) {
                    bad.push(format!("magma {i}: is_ideal {side:?} {s:?}"));
                }
            }
            let whole: Vec<usize> = (0..t.n).collect();
            let modes: [(NormalMode, Option<bool>); 4] = if support::closed(&t, s) {
                [
                    (NormalMode::Subgroupoid(NormalRange::Subset), Some(support::three_equations(&t, s, s))),
                    (NormalMode::Subgroupoid(NormalRange::Whole), Some(support::three_equations(&t, s, &whole))),
                    (NormalMode::Subloop, Some(support::three_equations(&t, s, &whole))),
                    (NormalMode::Subgroup, support::conjugation_normal(&t, s)),
                ]
            } else {
                [
                    (NormalMode::Subgroupoid(NormalRange::Subset), None),
                    (NormalMode::Subgroupoid(NormalRange::Whole), None),
                    (NormalMode::Subloop, None),
                    (NormalMode::Subgroup, None),
                ]
            };
            for (mode, want) in modes {
                checks += 1;
                if is_normal(&m, &sub, mode).ok() != want {
                    bad.push(format!("magma {i}: is_normal {mode:?} {s:?}"));
                }
            }
        }

        let pick = &all_subsets[i % all_subsets.len()];
        for law in IdentityLaw::ALL {
            for dom in [None, Some(pick)] {
                let whole: Vec<usize> = (0..t.n).collect();
                let want = support::law(&t, law.name(), dom.map_or(&whole, |d| d));
                let sub = dom.map(|d| Subset::new(d.iter().copied()));
                let got = check_identity_law(&m, law, sub.as_ref()).map(|c| c.witness).map_err(|_| ());
                checks += 1;
                if got != want {
                    bad.push(format!("magma {i}: {} on {dom:?}: engine {got:?}, oracle {want:?}", law.name()));
                }
            }
        }
    }
    report(bad.is_empty(), format!("50 magmas, {checks} comparisons, disagreements {bad:?}"))
}

fn c12_discrepancy_handling() -> Result<Report> {
    let summary = corpus::run(None)?;
    let mut parts = Vec::new();
    let mut ok = summary.exit_code() == 0;
    for id in ["ex-2.1.2-divisibility", "ex-4.1.1-relabel"] {
        let st = summary.get(id).map(|r| r.status);
        ok &= st == Some(Status::Discrepancy);
        parts.push(format!("{id} {}", st.map_or("missing", Status::name)));
    }
    parts.push(format!(
        "corpus {} entries, {} fail, exit code {}",
        summary.results.len(),
        summary.count(Status::Fail),
        summary.exit_code()
    ));
    report(ok, parts.join("; "))
}

type Criterion = (&'static str, fn() -> Result<Report>);

const CRITERIA: &[Criterion] = &[
    ("C1 table fidelity", c1_table_fidelity),
    ("C2 loop-class counting", c2_loop_class_counting),
    ("C3 alternative/Moufang sweep", c3_alternative_moufang_sweep),
    ("C4 WIP law", c4_wip),
    ("C5 groupoid theorems", c5_groupoid_theorems),
    ("C6 neutrosophic doubling", c6_neutrosophic_doubling),
    ("C7 coset corpus", c7_coset_corpus),
    ("C8 conjugacy corpus", c8_conjugacy_corpus),
    ("C9 classification-engine corpus", c9_engine_corpus),
    ("C10 prime-order property suite", c10_prime_order),
    ("C11 oracle equivalence", c11_oracle_equivalence),
    ("C12 discrepancy handling", c12_discrepancy_handling),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (name, f) in CRITERIA {
        let start = Instant::now();
        let (ok, detail) = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(Ok(r)) => (r.ok, r.detail),
            Ok(Err(e)) => (false, format!("error: {e}")),
            Err(_) => (false, "panicked".to_string()),
        };
        failed += !ok as usize;
        println!(
            "{} {name} ({:.2}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
