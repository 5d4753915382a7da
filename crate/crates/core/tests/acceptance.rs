//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use symreal::brutegroups::{count_involutions, so_odd_group, sp_group, DEFAULT_MAX_ELEMENTS};
use symreal::exact::{pow_i, rat, rat_string, ratio, sp_order_factor, Rat};
use symreal::jordan::{degree_sum_direct, degree_sum_from_series};
use symreal::partitions::{enumerate_partitions, partitions_up_to, principal_specialization, schur_poly_oracle, Partition};
use symreal::qseries::{named_series, SeriesName};
use symreal::symbols::{enumerate_symbols, symbol_degree};
use symreal::unipotent::{unipotent_degree, Family};
use symreal::verify::{run_verify, Claim, VerifyParams};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: symreal::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn int(x: i64) -> String {
    rat_string(&rat(x))
}

fn scaled_coeff(name: SeriesName, q: u64, n: usize) -> Result<BigInt, String> {
    let s = lib(named_series(name, q, None, n))?;
    let v = lib(s.coeff(n).cloned())? * Rat::from_integer(sp_order_factor(q, n));
    ensure(v.is_integer(), || format!("{} coefficient {v} is not integral", name.as_str()))?;
    Ok(v.to_integer())
}

fn criterion_main1() -> Outcome {
    let mut checked = 0;
    for q in [2, 3, 4, 5, 8, 9] {
        for n in 0..=5 {
            let r = lib(run_verify(Claim::Main1, &VerifyParams::qn(q, n)))?;
            ensure(r.equal, || format!("q = {q}, n = {n}: {} vs {}", r.lhs, r.rhs))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} coefficients equal"))
}

fn criterion_main2() -> Outcome {
    // anchors counted from the explicit groups
    let anchors = [(1usize, 2u64, Some(4i64)), (2, 2, Some(76)), (3, 2, None), (1, 4, Some(16))];
    for (n, q, anchor) in anchors {
        let direct = lib(degree_sum_direct(q, n))?.total;
        let series = scaled_coeff(SeriesName::FgsSpEven, q, n)?;
        ensure(direct == series, || format!("Sp({}, {q}): direct {direct} vs series {series}", 2 * n))?;
        if let Some(a) = anchor {
            let g = lib(sp_group(n, q, DEFAULT_MAX_ELEMENTS))?;
            let brute = BigInt::from(count_involutions(&g));
            ensure(brute == BigInt::from(a), || format!("Sp({}, {q}) brute count {brute}, anchor {a}", 2 * n))?;
            ensure(direct == brute, || format!("Sp({}, {q}): direct {direct} vs brute {brute}", 2 * n))?;
        }
    }
    let t = Instant::now();
    let g = lib(sp_group(3, 2, DEFAULT_MAX_ELEMENTS))?;
    let brute = BigInt::from(count_involutions(&g));
    let series = scaled_coeff(SeriesName::FgsSpEven, 2, 3)?;
    ensure(brute == series, || format!("Sp(6, 2): brute {brute} vs series {series}"))?;
    Ok(format!("4 chains equal, Sp(6,2) stress {brute} involutions in {} ms", t.elapsed().as_millis()))
}

fn criterion_gow() -> Outcome {
    let anchors = [(1usize, 3u64, Some(10i64)), (1, 5, Some(26)), (2, 3, None)];
    for (n, q, anchor) in anchors {
        let direct = lib(degree_sum_direct(q, n))?.total;
        let series = scaled_coeff(SeriesName::FgsSoOdd, q, n)?;
        let g = lib(so_odd_group(n, q, DEFAULT_MAX_ELEMENTS))?;
        let brute = BigInt::from(count_involutions(&g));
        let m = 2 * n + 1;
        ensure(direct == series && series == brute, || {
            format!("SO({m}, {q}): direct {direct}, series {series}, brute {brute}")
        })?;
        if let Some(a) = anchor {
            ensure(brute == BigInt::from(a), || format!("SO({m}, {q}) brute count {brute}, anchor {a}"))?;
        }
    }
    Ok("3 triples equal".into())
}

fn criterion_genfunso() -> Outcome {
    for q in [2, 3] {
        for n in 0..=3 {
            let direct = lib(degree_sum_direct(q, n))?.total;
            let series = lib(degree_sum_from_series(q, n))?;
            ensure(direct == series, || format!("q = {q}, n = {n}: {direct} vs {series}"))?;
        }
    }
    Ok("8 degree sums equal".into())
}

fn criterion_guexpand() -> Outcome {
    for q in [2, 3, 5] {
        let r = lib(run_verify(Claim::GuExpand, &VerifyParams::q_order(q, 6)))?;
        ensure(r.equal, || format!("q = {q}: {} vs {}", r.lhs, r.rhs))?;
    }
    Ok("3 series equal to order 6".into())
}

fn criterion_dualgenfn() -> Outcome {
    for q in [2u64, 3, 4, 5] {
        let e = if q % 2 == 0 { 1 } else { 2 };
        // (1-w)^e / (1-qw) and 1-w as explicit coefficient lists
        let mut a = Vec::new();
        for k in 0..=8u32 {
            let qk = |j: u32| BigInt::from(q).pow(j);
            let c = if e == 1 {
                if k == 0 { BigInt::one() } else { qk(k) - qk(k - 1) }
            } else {
                match k {
                    0 => BigInt::one(),
                    1 => qk(1) - 2,
                    _ => qk(k) - 2 * qk(k - 1) + qk(k - 2),
                }
            };
            a.push(rat_string(&Rat::from_integer(c)));
        }
        let b: Vec<String> = (0..=8).map(|k| int(match k { 0 => 1, 1 => -1, _ => 0 })).collect();
        for (claim, want) in [(Claim::DualGenFnA, a.join(",")), (Claim::DualGenFnB, b.join(","))] {
            let r = lib(run_verify(claim, &VerifyParams::q_order(q, 8)))?;
            ensure(r.equal && r.rhs == want, || format!("{claim} q = {q}: {} vs {} (expected {want})", r.lhs, r.rhs))?;
        }
    }
    Ok("8 identities equal to order 8".into())
}

/// `s_λ(1, x, …, x^{k-1}) = x^{a(λ)} Π (1 - x^{k + c(y)}) / (1 - x^{h(y)})`,
/// with `c(y) = j - i` the content.
fn finite_principal(lambda: &Partition, x: &Rat, k: usize) -> Rat {
    let mut v = pow_i(x, lambda.a_stat() as i64);
    for h in lambda.hooks() {
        v /= Rat::one() - pow_i(x, h as i64);
    }
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            v *= Rat::one() - pow_i(x, k as i64 + j as i64 - i as i64);
        }
    }
    v
}

fn criterion_schur() -> Outcome {
    for vars in 1..=4 {
        for claim in [Claim::SchurId1, Claim::SchurId2] {
            let r = lib(run_verify(claim, &VerifyParams::schur(vars, 8)))?;
            ensure(r.equal, || format!("{claim} with {vars} variables: {} vs {}", r.lhs, r.rhs))?;
        }
    }
    let points = [ratio(1, 2), ratio(-1, 2), ratio(1, 3), ratio(-1, 3)];
    let k = 48;
    let mut compared = 0;
    for x in &points {
        let ax = x.abs();
        let values: Vec<Rat> = (0..k).map(|i| pow_i(x, i as i64)).collect();
        for lambda in partitions_up_to(6) {
            let closed = lib(principal_specialization(&lambda, x))?;
            for kk in [1, 2, 3, 5] {
                let oracle = schur_poly_oracle(&lambda, &values[..kk]);
                let fin = finite_principal(&lambda, x, kk);
                ensure(oracle == fin, || format!("{lambda} at {x} with {kk} variables: {oracle} vs {fin}"))?;
            }
            let oracle = schur_poly_oracle(&lambda, &values);
            // union bound over cells holding an entry larger than k
            let m = lambda.size() as i64;
            let tail = rat(m) * pow_i(&ax, k as i64) / pow_i(&(Rat::one() - &ax), m);
            let gap = (&closed - &oracle).abs();
            ensure(gap <= tail, || format!("{lambda} at {x}: gap {gap} exceeds tail bound {tail}"))?;
            ensure(m == 0 || tail < ratio(1, 1_000_000_000), || format!("tail bound {tail} too weak"))?;
            compared += 1;
        }
    }
    Ok(format!("8 identities equal; {compared} specializations within tail bounds"))
}

fn criterion_integrality() -> Outcome {
    let mut count = 0usize;
    for q in [2u64, 3, 4, 5, 8, 9] {
        for d in 1..=3u32 {
            let big_q = q.pow(d);
            for n in 0..=6 {
                for lambda in enumerate_partitions(n) {
                    for fam in [Family::GL, Family::U] {
                        let deg = lib(unipotent_degree(fam, &lambda, big_q))?.degree;
                        ensure(deg.is_positive(), || format!("{fam} degree of {lambda} at Q = {big_q}"))?;
                        count += 1;
                    }
                }
            }
        }
        for n in 0..=5 {
            for sym in lib(enumerate_symbols(n))? {
                let deg = lib(symbol_degree(&sym, q))?;
                ensure(deg.is_positive(), || format!("symbol {sym} at q = {q}"))?;
                count += 1;
            }
        }
    }
    let mut chars = 0u64;
    for (q, max_n) in [(2u64, 3usize), (3, 3), (4, 1), (5, 1)] {
        for n in 0..=max_n {
            let d = lib(degree_sum_direct(q, n))?;
            ensure(!d.total.is_zero(), || format!("empty degree sum at q = {q}, n = {n}"))?;
            chars += d.characters;
        }
    }
    Ok(format!("{count} unipotent degrees and {chars} character degrees integral"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 unipotent sum closed form", criterion_main1),
        ("2 even q degree sum = involutions", criterion_main2),
        ("3 odd q degree sum = involutions", criterion_gow),
        ("4 degree sum generating function", criterion_genfunso),
        ("5 GL/U product expansion", criterion_guexpand),
        ("6 self-dual census identities", criterion_dualgenfn),
        ("7 Schur function layer", criterion_schur),
        ("8 integrality gates", criterion_integrality),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("aborted: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({ms} ms)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} ({ms} ms)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
