use hyperlambda::schemes::bound_suite;
use hyperlambda::spectral::{check_cheeger, check_gap_corollary, check_gap_corollary_hypergraph, check_lambda_expansion};
use hyperlambda::{BoundReport, BoundRow, Error, Hypergraph};

/// Hypothesis failures become skipped rows; anything else is an error.
fn hypothesis(e: &Error) -> bool {
    matches!(
        e,
        Error::NotRegular | Error::NotAGraph | Error::Disconnected | Error::TooLarge { .. } | Error::Structure(_)
    )
}

fn push(rows: &mut Vec<BoundRow>, names: &[&str], result: hyperlambda::Result<Vec<BoundReport>>) -> hyperlambda::Result<()> {
    match result {
        Ok(reports) => rows.extend(reports.into_iter().map(BoundRow::from)),
        Err(e) if hypothesis(&e) => rows.extend(
            names.iter().map(|n| BoundRow::Skipped { name: n.to_string(), reason: e.to_string() }),
        ),
        Err(e) => return Err(e),
    }
    Ok(())
}

/// Cheeger pair, the λ-expansion inequality, the spectral-gap corollary and
/// Griggs–Yeh, in that order. `upper` appends the rest of the upper-bound
/// suite at `(2, 1)`.
pub fn rows(hg: &Hypergraph, lambda: u32, upper: bool) -> hyperlambda::Result<Vec<BoundRow>> {
    let mut rows = Vec::new();
    push(&mut rows, &["cheeger_lower", "cheeger_upper"], check_cheeger(hg).map(Vec::from))?;
    push(&mut rows, &["lambda_expansion"], check_lambda_expansion(hg, lambda).map(|r| vec![r]))?;
    if hg.is_graph() {
        push(&mut rows, &["gap_corollary"], check_gap_corollary(hg, lambda).map(|r| vec![r]))?;
    } else {
        push(&mut rows, &["gap_corollary_hypergraph"], check_gap_corollary_hypergraph(hg, lambda).map(|r| vec![r]))?;
    }
    let suite = bound_suite(hg, 2, 1, lambda)?;
    match suite.iter().find(|r| r.name == "griggs_yeh") {
        Some(r) => rows.push(r.clone().into()),
        None => rows.push(BoundRow::Skipped { name: "griggs_yeh".into(), reason: "diameter is not 2".into() }),
    }
    if upper {
        rows.extend(suite.into_iter().filter(|r| r.name != "griggs_yeh").map(BoundRow::from));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperlambda::constructions::{fano_plane, petersen_graph};

    #[test]
    fn fano_rows() {
        let rows = rows(&fano_plane().unwrap(), 12, false).unwrap();
        let names: Vec<&str> = rows.iter().map(BoundRow::name).collect();
        assert_eq!(names, ["cheeger_lower", "cheeger_upper", "lambda_expansion", "gap_corollary_hypergraph", "griggs_yeh"]);
        assert!(matches!(rows[0], BoundRow::Skipped { .. }));
        assert!(matches!(&rows[3], BoundRow::Evaluated(r) if r.holds));
    }

    #[test]
    fn upper_rows_follow() {
        let rows = rows(&petersen_graph().unwrap(), 9, true).unwrap();
        assert_eq!(rows.len(), 10);
        assert!(rows.iter().all(BoundRow::ok));
        assert_eq!(rows.iter().filter(|r| r.name() == "griggs_yeh").count(), 1);
    }
}
