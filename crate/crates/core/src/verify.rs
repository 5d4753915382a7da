//! Each checkable identity as a named claim whose two sides come from
//! independent computations.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::brutegroups::{count_involutions, so_odd_group, sp_group, sp_order, DEFAULT_MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::exact::{e_of, rat, rat_string, sp_order_factor, Rat};
use crate::ffcensus::{series_string, verify_dualgenfn, DualPart};
use crate::jordan::{degree_sum_direct, degree_sum_from_series, guexpand_lhs};
use crate::partitions::{partitions_up_to, schur_poly_oracle};
use crate::qseries::{factor_log, gl_unip_closed, named_series, u_unip_closed, Polynomial, SeriesName, TruncatedSeries};
use crate::symbols::w_series_enum;
use crate::unipotent::{unipotent_sum_series, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Claim {
    /// Symbol enumeration of `W(u)` against its product form.
    #[serde(rename = "main1")]
    Main1,
    /// `q` even: degree sum equals the involution count of `Sp(2n, q)`.
    #[serde(rename = "main2")]
    Main2,
    /// `q` odd: degree sum equals the involution count of `SO(2n+1, q)`.
    #[serde(rename = "gow")]
    Gow,
    /// Direct degree sum against the Euler-product generating function.
    #[serde(rename = "genfunso")]
    GenFunSo,
    /// Census-built `GL`/`U` product against its closed form.
    #[serde(rename = "guexpand")]
    GuExpand,
    #[serde(rename = "dualgenfn-a")]
    DualGenFnA,
    #[serde(rename = "dualgenfn-b")]
    DualGenFnB,
    /// `Σ s_λ = Π (1-x_i)^{-1} Π (1-x_i x_j)^{-1}` at `x_i = z^i`.
    #[serde(rename = "schurid-1")]
    SchurId1,
    /// `Σ (-1)^{a(λ)} s_λ = Π (1-x_i)^{-1} Π (1+x_i x_j)^{-1}` at `x_i = z^i`.
    #[serde(rename = "schurid-2")]
    SchurId2,
    /// Enumerated `GL` unipotent sums against their product form.
    #[serde(rename = "gexp")]
    Gexp,
    /// Enumerated `U` unipotent sums against their product form.
    #[serde(rename = "uexp")]
    Uexp,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::Main1,
        Claim::Main2,
        Claim::Gow,
        Claim::GenFunSo,
        Claim::GuExpand,
        Claim::DualGenFnA,
        Claim::DualGenFnB,
        Claim::SchurId1,
        Claim::SchurId2,
        Claim::Gexp,
        Claim::Uexp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Claim::Main1 => "main1",
            Claim::Main2 => "main2",
            Claim::Gow => "gow",
            Claim::GenFunSo => "genfunso",
            Claim::GuExpand => "guexpand",
            Claim::DualGenFnA => "dualgenfn-a",
            Claim::DualGenFnB => "dualgenfn-b",
            Claim::SchurId1 => "schurid-1",
            Claim::SchurId2 => "schurid-2",
            Claim::Gexp => "gexp",
            Claim::Uexp => "uexp",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown claim `{s}`")))
    }
}

/// Inputs to [`run_verify`]. Which fields are required depends on the claim.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyParams {
    pub q: Option<u64>,
    pub n: Option<usize>,
    pub order: Option<usize>,
    /// Number of variables for the Schur identities.
    pub vars: Option<usize>,
    /// Brute-force budget; groups larger than this use the series route.
    pub max_elements: Option<usize>,
}

impl VerifyParams {
    pub fn qn(q: u64, n: usize) -> Self {
        VerifyParams { q: Some(q), n: Some(n), ..Default::default() }
    }

    pub fn q_order(q: u64, order: usize) -> Self {
        VerifyParams { q: Some(q), order: Some(order), ..Default::default() }
    }

    pub fn schur(vars: usize, order: usize) -> Self {
        VerifyParams { vars: Some(vars), order: Some(order), ..Default::default() }
    }

    fn need_q(&self, claim: Claim) -> Result<u64> {
        self.q.ok_or_else(|| Error::Parameter(format!("{claim} needs --q")))
    }

    fn need_n(&self, claim: Claim) -> Result<usize> {
        self.n.ok_or_else(|| Error::Parameter(format!("{claim} needs --n")))
    }

    fn need_order(&self, claim: Claim) -> Result<usize> {
        self.order.ok_or_else(|| Error::Parameter(format!("{claim} needs --order")))
    }

    fn need_vars(&self, claim: Claim) -> Result<usize> {
        self.vars.ok_or_else(|| Error::Parameter(format!("{claim} needs --vars")))
    }

    fn budget(&self) -> usize {
        self.max_elements.unwrap_or(DEFAULT_MAX_ELEMENTS)
    }
}

/// Where the right-hand side of an involution claim came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Brute,
    Series,
}

/// The outcome of one claim. Both sides are canonical `p/q` strings, or
/// comma-separated coefficient lists for series identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: Claim,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<Route>,
    /// The generating-function value, when the right side was counted by
    /// brute force; it must agree too.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<String>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    fn new(claim: Claim, lhs: String, rhs: String) -> Self {
        VerificationReport {
            claim,
            q: None,
            n: None,
            order: None,
            vars: None,
            route: None,
            series: None,
            equal: lhs == rhs,
            lhs,
            rhs,
            elapsed_ms: 0,
        }
    }

    fn sort_key(&self) -> (Claim, u64, usize, usize, usize) {
        (self.claim, self.q.unwrap_or(0), self.n.unwrap_or(0), self.order.unwrap_or(0), self.vars.unwrap_or(0))
    }
}

fn int_string(x: &num_bigint::BigInt) -> String {
    rat_string(&Rat::from_integer(x.clone()))
}

fn check_parity(claim: Claim, q: u64, want_even: bool) -> Result<()> {
    if q.is_multiple_of(2) != want_even {
        let kind = if want_even { "even" } else { "odd" };
        return Err(Error::Parameter(format!("{claim} needs {kind} q, got {q}")));
    }
    Ok(())
}

/// Scaled `[u^n]` of a named involution series, as an integer string.
fn involution_series(name: SeriesName, q: u64, n: usize) -> Result<String> {
    let s = named_series(name, q, None, n)?;
    Ok(rat_string(&(s.coeff(n)? * Rat::from_integer(sp_order_factor(q, n)))))
}

fn involution_claim(claim: Claim, params: &VerifyParams) -> Result<VerificationReport> {
    let q = params.need_q(claim)?;
    let n = params.need_n(claim)?;
    let (series_name, even) = match claim {
        Claim::Main2 => (SeriesName::FgsSpEven, true),
        _ => (SeriesName::FgsSoOdd, false),
    };
    check_parity(claim, q, even)?;
    let lhs = int_string(&degree_sum_direct(q, n)?.total);
    let series = involution_series(series_name, q, n)?;
    let affordable = sp_order(n, q).is_some_and(|o| o <= params.budget() as u128);
    // Sp(0, q) has no matrices; the series route covers n = 0.
    let brute_ok = affordable && (n > 0 || claim == Claim::Gow);
    let mut report = if brute_ok {
        let group = match claim {
            Claim::Main2 => sp_group(n, q, params.budget())?,
            _ => so_odd_group(n, q, params.budget())?,
        };
        let rhs = rat_string(&rat(count_involutions(&group) as i64));
        let mut r = VerificationReport::new(claim, lhs, rhs);
        r.equal = r.equal && r.lhs == series;
        r.route = Some(Route::Brute);
        r.series = Some(series);
        r
    } else {
        let mut r = VerificationReport::new(claim, lhs, series);
        r.route = Some(Route::Series);
        r
    };
    report.q = Some(q);
    report.n = Some(n);
    Ok(report)
}

/// `Σ_{|λ| ≤ order} σ(λ) s_λ(z, z², …, z^k)` truncated at `z^order`.
pub fn schur_sum_lhs(vars: usize, order: usize, signed: bool) -> TruncatedSeries {
    let values: Vec<Polynomial> = (1..=vars).map(|i| Polynomial::monomial(rat(1), i)).collect();
    let mut acc = Polynomial::new(vec![]);
    for lambda in partitions_up_to(order) {
        let mut s = schur_poly_oracle(&lambda, &values);
        if signed && lambda.a_stat() % 2 == 1 {
            s = s * Polynomial::new(vec![rat(-1)]);
        }
        acc = acc + s;
    }
    acc.truncate(order)
}

/// `Π_i (1 - z^i)^{-1} Π_{i<j} (1 ∓ z^{i+j})^{-1}` over `1 ≤ i, j ≤ vars`.
pub fn schur_sum_rhs(vars: usize, order: usize, signed: bool) -> Result<TruncatedSeries> {
    let mut log = TruncatedSeries::zero(order);
    let pair_c = if signed { rat(1) } else { rat(-1) };
    for i in 1..=vars {
        log = log.add(&factor_log(&rat(-1), i, -1, order))?;
        for j in i + 1..=vars {
            log = log.add(&factor_log(&pair_c, i + j, -1, order))?;
        }
    }
    log.exp()
}

/// Runs one claim.
pub fn run_verify(claim: Claim, params: &VerifyParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = match claim {
        Claim::Main1 => {
            let q = params.need_q(claim)?;
            let n = params.need_n(claim)?;
            let lhs = w_series_enum(q, n)?;
            let rhs = named_series(SeriesName::WClosed, q, None, n)?;
            let mut r = VerificationReport::new(claim, rat_string(lhs.coeff(n)?), rat_string(rhs.coeff(n)?));
            r.q = Some(q);
            r.n = Some(n);
            r
        }
        Claim::Main2 | Claim::Gow => involution_claim(claim, params)?,
        Claim::GenFunSo => {
            let q = params.need_q(claim)?;
            let n = params.need_n(claim)?;
            let lhs = int_string(&degree_sum_direct(q, n)?.total);
            let rhs = int_string(&degree_sum_from_series(q, n)?);
            let mut r = VerificationReport::new(claim, lhs, rhs);
            r.q = Some(q);
            r.n = Some(n);
            r
        }
        Claim::GuExpand => {
            let q = params.need_q(claim)?;
            let order = params.need_order(claim)?;
            let lhs = guexpand_lhs(q, order)?;
            let rhs = named_series(SeriesName::GuexpandRhs, q, Some(e_of(q)), order)?;
            let mut r = VerificationReport::new(claim, series_string(&lhs), series_string(&rhs));
            r.q = Some(q);
            r.order = Some(order);
            r
        }
        Claim::DualGenFnA | Claim::DualGenFnB => {
            let q = params.need_q(claim)?;
            let order = params.need_order(claim)?;
            let part = if claim == Claim::DualGenFnA { DualPart::A } else { DualPart::B };
            let d = verify_dualgenfn(q, order, part)?;
            let mut r = VerificationReport::new(claim, d.lhs_string(), d.rhs_string());
            r.q = Some(q);
            r.order = Some(order);
            r
        }
        Claim::SchurId1 | Claim::SchurId2 => {
            let vars = params.need_vars(claim)?;
            let order = params.need_order(claim)?;
            if vars > 6 || order > 10 {
                return Err(Error::CapExceeded { what: "schur identity size", value: vars.max(order) as u64, cap: 10 });
            }
            let signed = claim == Claim::SchurId2;
            let lhs = schur_sum_lhs(vars, order, signed);
            let rhs = schur_sum_rhs(vars, order, signed)?;
            let mut r = VerificationReport::new(claim, series_string(&lhs), series_string(&rhs));
            r.vars = Some(vars);
            r.order = Some(order);
            r
        }
        Claim::Gexp | Claim::Uexp => {
            let q = params.need_q(claim)?;
            let order = params.need_order(claim)?;
            let (family, closed) = if claim == Claim::Gexp {
                (Family::GL, gl_unip_closed(q, 1, order)?)
            } else {
                (Family::U, u_unip_closed(q, 1, order)?)
            };
            let lhs = unipotent_sum_series(family, q, 1, order)?;
            let mut r = VerificationReport::new(claim, series_string(&lhs), series_string(&closed));
            r.q = Some(q);
            r.order = Some(order);
            r
        }
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::Parameter(format!("unknown profile `{s}`"))),
        }
    }
}

/// The claims and parameters making up a profile.
pub fn profile_plan(profile: Profile) -> Vec<(Claim, VerifyParams)> {
    let mut plan = Vec::new();
    let (main1_q, main1_n): (&[u64], usize) = match profile {
        Profile::Quick => (&[2, 3], 2),
        Profile::Full => (&[2, 3, 4, 5, 8, 9], 5),
    };
    for &q in main1_q {
        for n in 0..=main1_n {
            plan.push((Claim::Main1, VerifyParams::qn(q, n)));
        }
    }
    let main2: &[(usize, u64)] = match profile {
        Profile::Quick => &[(1, 2), (2, 2)],
        Profile::Full => &[(1, 2), (2, 2), (3, 2), (1, 4)],
    };
    plan.extend(main2.iter().map(|&(n, q)| (Claim::Main2, VerifyParams::qn(q, n))));
    let gow: &[(usize, u64)] = match profile {
        Profile::Quick => &[(1, 3)],
        Profile::Full => &[(1, 3), (1, 5), (2, 3)],
    };
    plan.extend(gow.iter().map(|&(n, q)| (Claim::Gow, VerifyParams::qn(q, n))));
    let small_n = if profile == Profile::Quick { 2 } else { 3 };
    for q in [2, 3] {
        for n in 0..=small_n {
            plan.push((Claim::GenFunSo, VerifyParams::qn(q, n)));
        }
    }
    let (gu_q, gu_order): (&[u64], usize) = match profile {
        Profile::Quick => (&[2, 3], 3),
        Profile::Full => (&[2, 3, 5], 6),
    };
    plan.extend(gu_q.iter().map(|&q| (Claim::GuExpand, VerifyParams::q_order(q, gu_order))));
    let (dual_q, dual_order): (&[u64], usize) = match profile {
        Profile::Quick => (&[2, 3], 4),
        Profile::Full => (&[2, 3, 4, 5], 8),
    };
    for &q in dual_q {
        plan.push((Claim::DualGenFnA, VerifyParams::q_order(q, dual_order)));
        plan.push((Claim::DualGenFnB, VerifyParams::q_order(q, dual_order)));
    }
    let (max_vars, schur_order) = match profile {
        Profile::Quick => (2, 4),
        Profile::Full => (4, 8),
    };
    for vars in 1..=max_vars {
        plan.push((Claim::SchurId1, VerifyParams::schur(vars, schur_order)));
        plan.push((Claim::SchurId2, VerifyParams::schur(vars, schur_order)));
    }
    let exp_order = if profile == Profile::Quick { 3 } else { 6 };
    for q in [2, 3] {
        plan.push((Claim::Gexp, VerifyParams::q_order(q, exp_order)));
        plan.push((Claim::Uexp, VerifyParams::q_order(q, exp_order)));
    }
    plan
}

/// Runs a whole profile; reports come back sorted by claim, then `q` and
/// `n`. Independent claims are spread over worker threads.
pub fn run_all(profile: Profile, max_elements: Option<usize>) -> Result<Vec<VerificationReport>> {
    let plan: Vec<(Claim, VerifyParams)> = profile_plan(profile)
        .into_iter()
        .map(|(c, mut p)| {
            p.max_elements = max_elements;
            (c, p)
        })
        .collect();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(plan.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut results: Vec<Option<Result<VerificationReport>>> = (0..plan.len()).map(|_| None).collect();
    let slots = std::sync::Mutex::new(&mut results);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= plan.len() {
                    break;
                }
                let (claim, params) = &plan[i];
                let r = run_verify(*claim, params);
                slots.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    let mut reports = results.into_iter().map(|r| r.expect("every slot filled")).collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(VerificationReport::sort_key);
    Ok(reports)
}

/// Fixed-width table, one row per report.
pub fn reports_table(reports: &[VerificationReport]) -> String {
    let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    let mut out = format!("{:<12} {:>3} {:>3} {:>5} {:>4} {:>6} {:>6} {:>9}  {}\n", "claim", "q", "n", "order", "vars", "route", "equal", "ms", "lhs");
    for r in reports {
        let route = r.route.map(|x| match x {
            Route::Brute => "brute".to_string(),
            Route::Series => "series".to_string(),
        });
        out.push_str(&format!(
            "{:<12} {:>3} {:>3} {:>5} {:>4} {:>6} {:>6} {:>9}  {}\n",
            r.claim.as_str(),
            opt(r.q.map(|x| x.to_string())),
            opt(r.n.map(|x| x.to_string())),
            opt(r.order.map(|x| x.to_string())),
            opt(r.vars.map(|x| x.to_string())),
            opt(route),
            r.equal,
            r.elapsed_ms,
            r.lhs
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_names_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.as_str().parse::<Claim>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{c}\""));
        }
        assert!("main3".parse::<Claim>().is_err());
    }

    #[test]
    fn spec_examples() {
        let r = run_verify(Claim::Main1, &VerifyParams::qn(3, 4)).unwrap();
        assert!(r.equal);
        let r = run_verify(Claim::Main2, &VerifyParams::qn(2, 1)).unwrap();
        assert_eq!((r.lhs.as_str(), r.rhs.as_str(), r.route), ("4/1", "4/1", Some(Route::Brute)));
        let r = run_verify(Claim::Main1, &VerifyParams::qn(2, 0)).unwrap();
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("1/1", "1/1"));
    }

    #[test]
    fn missing_or_bad_parameters() {
        assert!(run_verify(Claim::Main1, &VerifyParams::default()).is_err());
        assert!(run_verify(Claim::Main2, &VerifyParams::qn(3, 1)).is_err());
        assert!(run_verify(Claim::Gow, &VerifyParams::qn(2, 1)).is_err());
    }

    #[test]
    fn series_route_when_over_budget() {
        let params = VerifyParams { max_elements: Some(10), ..VerifyParams::qn(2, 2) };
        let r = run_verify(Claim::Main2, &params).unwrap();
        assert_eq!(r.route, Some(Route::Series));
        assert_eq!(r.rhs, "76/1");
        assert!(r.equal);
    }

    #[test]
    fn schur_identities_small() {
        for vars in 1..=3 {
            for claim in [Claim::SchurId1, Claim::SchurId2] {
                assert!(run_verify(claim, &VerifyParams::schur(vars, 6)).unwrap().equal);
            }
        }
    }

    #[test]
    fn quick_profile_all_equal_and_sorted() {
        let reports = run_all(Profile::Quick, None).unwrap();
        assert!(reports.iter().all(|r| r.equal), "{}", reports_table(&reports));
        let keys: Vec<_> = reports.iter().map(VerificationReport::sort_key).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn report_json_round_trip() {
        let r = run_verify(Claim::GuExpand, &VerifyParams::q_order(2, 3)).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
