use std::fmt;

use clap::ValueEnum;
use hyperlambda::constructions::{cartesian_product, complete_graph, hyperpath, s_section, star_hypergraph};
use hyperlambda::schemes::{
    diameter_two_certificate, product_star_complete_formula, scheme_hyperpath, scheme_hypertree,
    scheme_product_complete, scheme_product_star_complete,
};
use hyperlambda::{check, corpus, lambda_exact, Hypergraph, SolveBudget};

use crate::bounds;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Campaign {
    #[value(name = "product-10-13")]
    Product1013,
    #[value(name = "star-product-97")]
    StarProduct97,
    StarLemmaSweep,
    HyperpathSweep,
    HypertreeSweep,
    SectionEquality,
    BoundsCorpus,
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Default)]
pub struct Report {
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    fn expect(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(case());
        }
    }
}

struct Ctx {
    budget: SolveBudget,
}

impl Ctx {
    fn lambda(&self, hg: &Hypergraph) -> hyperlambda::Result<u32> {
        lambda_exact(hg, 2, 1, &self.budget)?.value()
    }
}

pub fn run(which: Campaign, count: Option<usize>, seed: Option<u64>, jobs: usize) -> anyhow::Result<Report> {
    let ctx = Ctx { budget: SolveBudget::default().with_jobs(jobs) };
    let mut rep = Report::default();
    match which {
        Campaign::Product1013 => {
            let out = scheme_product_complete(13, 10)?;
            let hg = cartesian_product(&complete_graph(10)?, &complete_graph(13)?)?;
            let cert = diameter_two_certificate(&hg, 2, 1, &out.colouring)?;
            rep.notes.push(format!(
                "H13 x H10: span {}, validated {}, fallback {}",
                out.claimed_span, out.validated, out.fallback_used
            ));
            rep.notes.push(format!(
                "certificate: diameter {}, injective {}, lower bound {}, optimal {}",
                cert.diameter, cert.injective, cert.lower_bound, cert.optimal
            ));
            rep.expect(out.validated && out.claimed_span == 129 && cert.optimal, || {
                format!("scheme_product_complete(13, 10): span {}, certificate {cert:?}", out.claimed_span)
            });
        }
        Campaign::StarProduct97 => {
            let out = scheme_product_star_complete(7, 4, 3, 14)?;
            rep.notes.push(format!(
                "K^7_(4,3) x H14: span {}, closed form {}, validated {}",
                out.claimed_span,
                product_star_complete_formula(7, 14, 2, 1),
                out.validated
            ));
            rep.expect(out.validated && out.claimed_span == 97, || {
                format!("scheme_product_star_complete(7, 4, 3, 14): span {}", out.claimed_span)
            });
        }
        Campaign::StarLemmaSweep => {
            for r in 2..=5usize {
                for c in 1..r {
                    for m in [2usize, 3] {
                        if m * (r - c) + c > 11 {
                            continue;
                        }
                        let got = ctx.lambda(&star_hypergraph(r, c, m)?)?;
                        let want = (m * (r - c) + 2 * c - 1) as u32;
                        rep.expect(got == want, || format!("star r={r} c={c} m={m}: exact {got}, expected {want}"));
                    }
                }
            }
        }
        Campaign::HyperpathSweep => {
            for r in [3usize, 4] {
                for (m, want) in [(1usize, 2 * r - 2), (2, 2 * r - 1), (3, 2 * r)] {
                    let got = ctx.lambda(&hyperpath(r, m)?)?;
                    rep.expect(got == want as u32, || format!("hyperpath r={r} m={m}: exact {got}, expected {want}"));
                }
            }
            for r in 3..=5usize {
                for m in 1..=6usize {
                    let want = match m {
                        1 => 2 * r - 2,
                        2 => 2 * r - 1,
                        _ => 2 * r,
                    } as u32;
                    let out = scheme_hyperpath(r, m)?;
                    rep.expect(out.validated && out.claimed_span == want, || {
                        format!("scheme_hyperpath({r}, {m}): span {}, expected {want}", out.claimed_span)
                    });
                }
            }
        }
        Campaign::HypertreeSweep => {
            for inst in corpus::hypertrees(count.unwrap_or(60), seed.unwrap_or(7))? {
                let hg = &inst.hypergraph;
                let base = (hg.max_degree() * (hg.rank() - 1)) as u32;
                let allowed = [base + 1, base + 2];
                let exact = ctx.lambda(hg)?;
                let out = scheme_hypertree(hg)?;
                let valid = check(hg, 2, 1, &out.colouring)?.valid;
                rep.expect(allowed.contains(&exact) && valid && allowed.contains(&out.claimed_span), || {
                    format!(
                        "{} {}: exact {exact}, scheme {} (valid {valid}), allowed {allowed:?}",
                        inst.name,
                        hg.to_json(),
                        out.claimed_span
                    )
                });
            }
        }
        Campaign::SectionEquality => {
            for inst in corpus::random_small(count.unwrap_or(120), seed.unwrap_or(2024))? {
                let hg = &inst.hypergraph;
                let base = ctx.lambda(hg)?;
                for s in 2..=hg.rank() {
                    let got = ctx.lambda(&s_section(hg, s)?)?;
                    rep.expect(got == base, || {
                        format!("{} {}: lambda {base}, {s}-section {got}", inst.name, hg.to_json())
                    });
                }
            }
        }
        Campaign::BoundsCorpus => {
            let all = corpus::regular_graphs()?.into_iter().chain(corpus::regular_hypergraphs()?);
            for inst in all {
                let lambda = ctx.lambda(&inst.hypergraph)?;
                for row in bounds::rows(&inst.hypergraph, lambda, false)? {
                    if let hyperlambda::BoundRow::Evaluated(r) = &row {
                        rep.expect(r.holds, || {
                            format!("{}: {} fails, {} {} {} ({:?})", inst.name, r.name, r.lhs, r.relation.symbol(), r.rhs, r.inputs)
                        });
                    }
                }
            }
        }
    }
    Ok(rep)
}
