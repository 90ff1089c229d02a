//! Constructive colouring schemes for structured families. Every scheme
//! result passes through the constraint checker before it is returned, so a
//! `SchemeOutcome` is always a valid colouring whose span is `claimed_span`.

mod bounds;
mod general;
mod hamilton;
mod products;
mod shapes;
mod trees;

use serde::Serialize;

use crate::constraints::{check_levels, check_with, span_of, Colouring, Requirements};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub use bounds::{
    bound_suite, diameter_two_certificate, star_lower_bound_certificate, InjectivityCertificate, StarCertificate,
};
pub use general::{scheme_from_line_colouring, scheme_greedy, scheme_stable_set, scheme_strong_partition};
pub use products::{
    product_star_complete_formula, scheme_product_complete, scheme_product_complete_on, scheme_product_star_complete,
    scheme_product_star_complete_hk, scheme_product_star_complete_on,
};
pub use shapes::{recognise_hyperpath, recognise_star, HyperpathShape, StarShape};
pub use trees::{scheme_hyperpath, scheme_hyperpath_on, scheme_hypertree, scheme_star, scheme_star_on};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeOutcome {
    pub colouring: Colouring,
    /// Span of `colouring`.
    pub claimed_span: u32,
    pub validated: bool,
    /// Set when the scheme's own construction was replaced by a search.
    pub fallback_used: bool,
}

/// Checker gate shared by all schemes.
pub(crate) fn finish(hg: &Hypergraph, h: u32, k: u32, colours: &[u32], fallback_used: bool) -> Result<SchemeOutcome> {
    check_levels(h, k)?;
    let report = check_with(hg, &Requirements::for_hypergraph(hg, h, k), colours);
    if !report.valid {
        let v = &report.violations[0];
        return Err(Error::SchemeFailed(format!(
            "{} violations, first {}-{} needs {} has {}",
            report.violations.len(),
            v.u,
            v.v,
            v.required,
            v.actual
        )));
    }
    Ok(SchemeOutcome {
        colouring: Colouring::from_vec(hg, colours),
        claimed_span: span_of(colours.iter().copied()),
        validated: true,
        fallback_used,
    })
}

/// Names accepted by `run_scheme`.
pub const SCHEME_NAMES: &[&str] = &[
    "greedy",
    "strong-partition",
    "stable-set",
    "line",
    "star",
    "hyperpath",
    "hypertree",
    "product-complete",
    "product-star-complete",
];

/// Runs a named scheme on an arbitrary input, recognising the family it
/// needs from the input's structure.
pub fn run_scheme(name: &str, hg: &Hypergraph, h: u32, k: u32) -> Result<SchemeOutcome> {
    check_levels(h, k)?;
    let need_21 = || {
        if (h, k) == (2, 1) {
            Ok(())
        } else {
            Err(Error::SchemeMismatch(format!("scheme {name} is defined for h=2, k=1")))
        }
    };
    match name {
        "greedy" => scheme_greedy(hg, h, k),
        "strong-partition" => {
            let classes = crate::solver::strong_colouring_exact(hg)?;
            scheme_strong_partition(hg, h, k, &classes)
        }
        "stable-set" => {
            let w = crate::solver::strong_stable_set_exact(hg)?;
            scheme_stable_set(hg, h, k, &w)
        }
        "line" => {
            need_21()?;
            scheme_from_line_colouring(hg)
        }
        "star" => {
            need_21()?;
            scheme_star_on(hg)
        }
        "hyperpath" => {
            need_21()?;
            scheme_hyperpath_on(hg)
        }
        "hypertree" => {
            need_21()?;
            scheme_hypertree(hg)
        }
        "product-complete" => {
            need_21()?;
            scheme_product_complete_on(hg)
        }
        "product-star-complete" => scheme_product_star_complete_on(hg, h, k),
        other => Err(Error::SchemeMismatch(format!("unknown scheme {other:?}; known: {}", SCHEME_NAMES.join(", ")))),
    }
}
