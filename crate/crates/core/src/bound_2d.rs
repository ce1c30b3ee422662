//! The two-variable certificate.
//!
//! With `alpha1 = 1`, `kappa = 1 - alpha2 + C_main` and `tau = C_axial`, the
//! bound `n <= ((1 - rho + eps)/2) k^2 + k` holds with `rho = xi^2`, where `xi`
//! is the positive root of `kappa xi^2 + tau xi - 1 = 0`. The root decreases
//! in both `kappa` and `tau`, so an interval enclosure of the two constants
//! yields a lower bound on `rho` at the corner `(kappa.hi, tau.hi)`.
//!
//! The anchor route instead evaluates `rho0` at fixed constants `(kappa0, tau0)`
//! and subtracts the root-variation bound
//! `|rho - rho0| <= |kappa - kappa0|/54 + |tau - tau0|/18`, maximised over the intervals.
//! The two routes are computed independently and serve as cross-checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fourier2d::{alpha2_exact, c_axial, c_main, TestFunction2D};
use crate::interval::{round_up, ConstantInterval};

/// Anchor constants for the lemma route: `kappa0 = 1 + 3.72471 + 4.76146`.
pub const KAPPA0: f64 = 9.48617;
pub const TAU0: f64 = 2.90289;

/// Truncation radii matching the reference constants.
pub const FULL_N_AXIAL: u64 = 50_000;
pub const FULL_N_MAIN: u64 = 4_000;
/// Desk-scale radii.
pub const FAST_N_AXIAL: u64 = 5_000;
pub const FAST_N_MAIN: u64 = 500;

/// Decimal places of the reported coefficient; rounding up absorbs `eps`.
pub const REPORT_DECIMALS: i32 = 4;

/// Positive root of `kappa xi^2 + tau xi - 1 = 0` in the cancellation-free form
/// `2 / (tau + sqrt(tau^2 + 4 kappa))`. No regime check.
pub fn xi_root(kappa: f64, tau: f64) -> f64 {
    2.0 / (tau + (tau * tau + 4.0 * kappa).sqrt())
}

fn check_regime(kappa: f64, tau: f64) -> Result<()> {
    // NaN fails both comparisons and is rejected here too
    if kappa >= 3.0 && tau >= 2.0 {
        Ok(())
    } else {
        Err(Error::OutsideRegime { kappa, tau })
    }
}

/// `rho = xi^2` for `kappa >= 3`, `tau >= 2`.
pub fn rho_from(kappa: f64, tau: f64) -> Result<f64> {
    check_regime(kappa, tau)?;
    let xi = xi_root(kappa, tau);
    Ok(xi * xi)
}

/// `|kappa - kappa0|/54 + |tau - tau0|/18`, valid when all four lie in the regime.
pub fn rho_variation_bound(kappa: f64, kappa0: f64, tau: f64, tau0: f64) -> Result<f64> {
    check_regime(kappa.min(kappa0), tau.min(tau0))?;
    Ok((kappa - kappa0).abs() / 54.0 + (tau - tau0).abs() / 18.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Evaluate `rho` at the pessimal corner of the intervals.
    #[default]
    Corner,
    /// Anchor `rho0` at `(KAPPA0, TAU0)` and subtract the root-variation bound.
    Lemma,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Route::Corner => "corner",
            Route::Lemma => "lemma",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corner" => Ok(Route::Corner),
            "lemma" => Ok(Route::Lemma),
            other => Err(Error::InvalidArgument(format!("unknown route {other:?}"))),
        }
    }
}

/// A plain `[lo, hi]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Span {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCertificate {
    pub alpha1: f64,
    pub alpha2: f64,
    pub c_axial: ConstantInterval,
    pub c_main: ConstantInterval,
    pub kappa: Span,
    pub tau: Span,
    /// Enclosure of the positive root.
    pub xi: Span,
    pub rho_lower: f64,
    /// `rho0` at the anchor, for the lemma route.
    pub rho_anchor: Option<f64>,
    pub route: Route,
    /// `(1 - rho_lower)/2` before rounding.
    pub coefficient_exact: f64,
    /// `(1 - rho_lower)/2` rounded up at the fourth decimal.
    pub coefficient_upper: f64,
    pub epsilon_note: &'static str,
}

const EPSILON_NOTE: &str = "eps > 0 is absorbed by rounding the coefficient up at the 4th decimal";

/// Certifies `rho_lower` and the final coefficient from enclosures of the two constants.
pub fn certify(
    c_axial: &ConstantInterval,
    c_main: &ConstantInterval,
    route: Route,
) -> Result<BoundCertificate> {
    for c in [c_axial, c_main] {
        if !c.is_valid() {
            return Err(Error::InvalidArgument(format!(
                "invalid interval [{}, {}]",
                c.lo, c.hi
            )));
        }
    }
    let alpha1 = TestFunction2D::ALPHA1;
    let alpha2 = alpha2_exact();
    let kappa = Span {
        lo: alpha1 - alpha2 + c_main.lo,
        hi: alpha1 - alpha2 + c_main.hi,
    };
    let tau = Span {
        lo: c_axial.lo,
        hi: c_axial.hi,
    };
    check_regime(kappa.lo, tau.lo)?;
    let xi = Span {
        lo: xi_root(kappa.hi, tau.hi),
        hi: xi_root(kappa.lo, tau.lo),
    };

    let (rho_lower, rho_anchor) = match route {
        Route::Corner => (rho_from(kappa.hi, tau.hi)?, None),
        Route::Lemma => {
            let rho0 = rho_from(KAPPA0, TAU0)?;
            let worst_kappa = if (kappa.lo - KAPPA0).abs() >= (kappa.hi - KAPPA0).abs() {
                kappa.lo
            } else {
                kappa.hi
            };
            let worst_tau = if (tau.lo - TAU0).abs() >= (tau.hi - TAU0).abs() {
                tau.lo
            } else {
                tau.hi
            };
            let variation = rho_variation_bound(worst_kappa, KAPPA0, worst_tau, TAU0)?;
            (rho0 - variation, Some(rho0))
        }
    };
    let coefficient_exact = (1.0 - rho_lower) / 2.0;
    Ok(BoundCertificate {
        alpha1,
        alpha2,
        c_axial: *c_axial,
        c_main: *c_main,
        kappa,
        tau,
        xi,
        rho_lower,
        rho_anchor,
        route,
        coefficient_exact,
        coefficient_upper: round_up(coefficient_exact, REPORT_DECIMALS),
        epsilon_note: EPSILON_NOTE,
    })
}

/// Computes both constants at the given radii and certifies.
pub fn certify_at(n_axial: u64, n_main: u64, route: Route) -> Result<BoundCertificate> {
    certify(&c_axial(n_axial), &c_main(n_main), route)
}

#[derive(Serialize)]
struct IntervalDoc {
    lo: f64,
    hi: f64,
    #[serde(rename = "N")]
    n: u64,
}

/// The serialized certificate, with a fixed field set and order.
#[derive(Serialize)]
pub struct CertificateDocument {
    alpha1: f64,
    alpha2: f64,
    c_axial: IntervalDoc,
    c_main: IntervalDoc,
    kappa: Span,
    tau: Span,
    rho_lower: f64,
    coefficient_upper: f64,
    route: Route,
}

impl BoundCertificate {
    pub fn document(&self) -> CertificateDocument {
        let doc = |c: &ConstantInterval| IntervalDoc {
            lo: c.lo,
            hi: c.hi,
            n: c.n,
        };
        CertificateDocument {
            alpha1: self.alpha1,
            alpha2: self.alpha2,
            c_axial: doc(&self.c_axial),
            c_main: doc(&self.c_main),
            kappa: self.kappa,
            tau: self.tau,
            rho_lower: self.rho_lower,
            coefficient_upper: self.coefficient_upper,
            route: self.route,
        }
    }

    /// The certificate as stable JSON (see [`crate::json`]).
    pub fn to_json(&self) -> String {
        crate::json::to_stable_string(&self.document())
    }
}
