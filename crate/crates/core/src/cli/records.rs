use super::emit::{Record, Value};
use super::PhiKind;
use crate::gapbounds::{GapBound, ShortIntervalBound};
use crate::limitation::{AsymptoteRow, Direction, LimitationResult};
use crate::primes::PrimeSumKind;
use crate::quadrature::QuadratureValue;
use crate::resonator::ResonatorParams;
use crate::tau::BoundEvaluation;
use crate::zerodata::{Extremes, GapStats};

fn opt(x: Option<f64>) -> Value {
    Value::Float(x.unwrap_or(f64::NAN))
}

pub struct PhiRow {
    pub kind: PhiKind,
    pub x: f64,
    pub kappa: f64,
    pub value: QuadratureValue,
}

impl Record for PhiRow {
    fn header() -> &'static [&'static str] {
        &["kind", "x", "kappa", "value", "error_estimate"]
    }

    fn values(&self) -> Vec<Value> {
        let kind = match self.kind {
            PhiKind::Phi => "phi",
            PhiKind::Phi2 => "phi2",
            PhiKind::Phi3 => "phi3",
        };
        vec![kind.into(), self.x.into(), self.kappa.into(), self.value.value.into(), self.value.error_estimate.into()]
    }
}

pub struct PrimeRow(pub u64);

impl Record for PrimeRow {
    fn header() -> &'static [&'static str] {
        &["p"]
    }

    fn values(&self) -> Vec<Value> {
        vec![self.0.into()]
    }
}

pub struct SieveRow {
    pub limit: u64,
    pub count: usize,
    pub largest: u64,
}

impl Record for SieveRow {
    fn header() -> &'static [&'static str] {
        &["L", "count", "largest"]
    }

    fn values(&self) -> Vec<Value> {
        vec![self.limit.into(), self.count.into(), self.largest.into()]
    }
}

pub struct PrimeSumRow {
    pub kind: PrimeSumKind,
    pub params: ResonatorParams,
    pub exact: f64,
    pub main: f64,
}

impl Record for PrimeSumRow {
    fn header() -> &'static [&'static str] {
        &["kind", "L", "h", "M", "exact", "main_term", "difference", "relative_difference"]
    }

    fn values(&self) -> Vec<Value> {
        let diff = self.exact - self.main;
        vec![
            self.kind.to_string().into(),
            self.params.limit.into(),
            self.params.h.into(),
            self.params.lower_cutoff.into(),
            self.exact.into(),
            self.main.into(),
            diff.into(),
            (diff / self.main).into(),
        ]
    }
}

pub struct ResonatorRow {
    pub params: ResonatorParams,
    pub support_size: usize,
}

impl Record for ResonatorRow {
    fn header() -> &'static [&'static str] {
        &["L", "h", "sign", "M", "y", "kappa", "alpha", "Q", "scaled_length", "phi3", "support_size"]
    }

    fn values(&self) -> Vec<Value> {
        let p = &self.params;
        vec![
            p.limit.into(),
            p.h.into(),
            p.sign.to_string().into(),
            p.lower_cutoff.into(),
            p.y.into(),
            p.kappa.into(),
            p.alpha.into(),
            p.amplitude_sq.into(),
            p.scaled_length.into(),
            p.phi3.into(),
            self.support_size.into(),
        ]
    }
}

pub struct QuotientRow {
    limit: u64,
    h: f64,
    sign: String,
    method: &'static str,
    quotient: f64,
    target: f64,
    main: Option<f64>,
}

impl QuotientRow {
    pub fn new(params: &ResonatorParams, method: &'static str, quotient: f64, target: f64, main: Option<f64>) -> Self {
        QuotientRow { limit: params.limit, h: params.h, sign: params.sign.to_string(), method, quotient, target, main }
    }
}

impl Record for QuotientRow {
    fn header() -> &'static [&'static str] {
        &["L", "h", "sign", "method", "quotient", "target", "ratio", "main_term"]
    }

    fn values(&self) -> Vec<Value> {
        vec![
            self.limit.into(),
            self.h.into(),
            self.sign.clone().into(),
            self.method.into(),
            self.quotient.into(),
            self.target.into(),
            (self.quotient / self.target).into(),
            opt(self.main),
        ]
    }
}

pub struct TauRow {
    pub xi: f64,
    pub limit: u64,
    pub log_t: f64,
    pub h: f64,
    pub quotient: f64,
    pub tau: f64,
}

impl Record for TauRow {
    fn header() -> &'static [&'static str] {
        &["xi", "L", "log_T", "h", "quotient", "tau"]
    }

    fn values(&self) -> Vec<Value> {
        vec![self.xi.into(), self.limit.into(), self.log_t.into(), self.h.into(), self.quotient.into(), self.tau.into()]
    }
}

pub struct BoundRow {
    pub form: &'static str,
    pub eval: BoundEvaluation,
}

impl Record for BoundRow {
    fn header() -> &'static [&'static str] {
        &["form", "W", "maximizer_x", "bound", "envelope"]
    }

    fn values(&self) -> Vec<Value> {
        let e = &self.eval;
        vec![self.form.into(), e.w.into(), e.maximizer_x.into(), e.bound.into(), opt(e.envelope)]
    }
}

impl Record for LimitationResult {
    fn header() -> &'static [&'static str] {
        &["r", "direction", "W", "xi0", "residual"]
    }

    fn values(&self) -> Vec<Value> {
        vec![self.r.into(), self.direction.to_string().into(), self.w.into(), self.xi0.into(), self.residual.into()]
    }
}

pub struct AsymptoteRecord(pub AsymptoteRow);

impl Record for AsymptoteRecord {
    fn header() -> &'static [&'static str] {
        &[
            "r",
            "lambda_xi0",
            "lambda_W",
            "mu_xi0",
            "mu_W",
            "lambda_normalized",
            "mu_normalized",
            "lambda_deviation",
            "mu_deviation",
        ]
    }

    fn values(&self) -> Vec<Value> {
        let a = &self.0;
        vec![
            a.r.into(),
            a.lambda.xi0.into(),
            a.lambda.w.into(),
            a.mu.xi0.into(),
            a.mu.w.into(),
            a.lambda.normalized().into(),
            a.mu.normalized().into(),
            a.lambda_deviation.into(),
            a.mu_deviation.into(),
        ]
    }
}

impl Record for GapBound {
    fn header() -> &'static [&'static str] {
        &["r", "lambda_lower_main", "lambda_correction", "lambda_lower", "mu_upper_main", "mu_correction", "mu_upper"]
    }

    fn values(&self) -> Vec<Value> {
        vec![
            self.r.into(),
            self.lambda_lower_main.into(),
            self.lambda_correction.into(),
            self.lambda_lower().into(),
            self.mu_upper_main.into(),
            self.mu_correction.into(),
            self.mu_upper().into(),
        ]
    }
}

pub struct SideConditionRow {
    pub b: f64,
    pub theta_prime: f64,
    pub r: u64,
    pub direction: Direction,
    pub holds: bool,
}

impl Record for SideConditionRow {
    fn header() -> &'static [&'static str] {
        &["b", "theta_prime", "r", "direction", "holds"]
    }

    fn values(&self) -> Vec<Value> {
        vec![
            self.b.into(),
            self.theta_prime.into(),
            self.r.into(),
            self.direction.to_string().into(),
            self.holds.into(),
        ]
    }
}

pub struct ShortIntervalRow {
    pub t: f64,
    pub h: f64,
    pub bound: ShortIntervalBound,
}

impl Record for ShortIntervalRow {
    fn header() -> &'static [&'static str] {
        &["T", "h", "main", "envelope"]
    }

    fn values(&self) -> Vec<Value> {
        vec![self.t.into(), self.h.into(), self.bound.main.into(), self.bound.envelope.into()]
    }
}

impl Record for GapStats {
    fn header() -> &'static [&'static str] {
        &["r", "count", "max_norm", "min_norm", "mean_norm", "argmax_index", "argmin_index"]
    }

    fn values(&self) -> Vec<Value> {
        vec![
            self.r.into(),
            self.count.into(),
            self.max_norm.into(),
            self.min_norm.into(),
            self.mean_norm.into(),
            self.argmax_index.into(),
            self.argmin_index.into(),
        ]
    }
}

pub struct TraceRow(pub f64, pub f64);

impl Record for TraceRow {
    fn header() -> &'static [&'static str] {
        &["t", "estimate"]
    }

    fn values(&self) -> Vec<Value> {
        vec![self.0.into(), self.1.into()]
    }
}

pub struct ExtremesRow {
    pub t: f64,
    pub h: f64,
    pub step: f64,
    pub extremes: Extremes,
    pub theorem1_main: f64,
}

impl Record for ExtremesRow {
    fn header() -> &'static [&'static str] {
        &["T", "h", "step", "sup", "sup_at", "inf", "inf_at", "evaluations", "lower_bound_main"]
    }

    fn values(&self) -> Vec<Value> {
        let e = &self.extremes;
        vec![
            self.t.into(),
            self.h.into(),
            self.step.into(),
            e.sup.into(),
            e.sup_at.into(),
            e.inf.into(),
            e.inf_at.into(),
            e.evaluations.into(),
            self.theorem1_main.into(),
        ]
    }
}
