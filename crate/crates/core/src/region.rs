//! Comparison-region grids: classify every point of a rational grid against
//! a reference outcome, reproducing the shaded-region figures as CSV.

use num_traits::Signed;

use crate::lottery::Outcome;
use crate::order::{OutcomePreorder, Verdict};
use crate::rational::{format_rational, Rational};
use crate::{Error, Result};

/// A classified grid over `[min, max]^2` with the given step.
#[derive(Clone, Debug)]
pub struct RegionGrid {
    pub reference: Outcome,
    pub min: Rational,
    pub max: Rational,
    pub step: Rational,
    /// Row-major cells: y descending (top row first), x ascending.
    pub cells: Vec<(Rational, Rational, Verdict)>,
}

pub fn region_grid(
    order: &OutcomePreorder,
    reference: &Outcome,
    min: &Rational,
    max: &Rational,
    step: &Rational,
) -> Result<RegionGrid> {
    if !step.is_positive() {
        return Err(Error::BadInput(format!(
            "step {} must be positive",
            format_rational(step)
        )));
    }
    if min >= max {
        return Err(Error::BadInput(format!(
            "degenerate bounds: min {} is not below max {}",
            format_rational(min),
            format_rational(max)
        )));
    }
    let mut ys = Vec::new();
    let mut y = max.clone();
    while y >= *min {
        ys.push(y.clone());
        y -= step;
    }
    let mut xs = Vec::new();
    let mut x = min.clone();
    while x <= *max {
        xs.push(x.clone());
        x += step;
    }
    let mut cells = Vec::with_capacity(xs.len() * ys.len());
    for y in &ys {
        for x in &xs {
            let point = Outcome::pair(x.clone(), y.clone());
            let verdict = order.compare(&point, reference)?;
            cells.push((x.clone(), y.clone(), verdict));
        }
    }
    Ok(RegionGrid {
        reference: reference.clone(),
        min: min.clone(),
        max: max.clone(),
        step: step.clone(),
        cells,
    })
}

/// Serializes as `x,y,verdict` rows in row-major order, with a header.
pub fn region_csv(grid: &RegionGrid) -> String {
    let mut out = String::from("x,y,verdict\n");
    for (x, y, v) in &grid.cells {
        out.push_str(&format!(
            "{},{},{}\n",
            format_rational(x),
            format_rational(y),
            v
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn grid() -> RegionGrid {
        let order = OutcomePreorder::lines(rat_int(2), rat(1, 2)).unwrap();
        region_grid(
            &order,
            &Outcome::pair(rat_int(0), rat_int(0)),
            &rat_int(-5),
            &rat_int(5),
            &rat(1, 4),
        )
        .unwrap()
    }

    fn cell(grid: &RegionGrid, x: Rational, y: Rational) -> Verdict {
        grid.cells
            .iter()
            .find(|(cx, cy, _)| *cx == x && *cy == y)
            .map(|(_, _, v)| *v)
            .unwrap()
    }

    #[test]
    fn classified_cells_match_direct_substitution() {
        let g = grid();
        assert_eq!(cell(&g, rat_int(1), rat_int(3)), Verdict::StrictlyAbove);
        assert_eq!(cell(&g, rat_int(2), rat_int(-2)), Verdict::Incomparable);
        assert_eq!(cell(&g, rat_int(0), rat_int(0)), Verdict::Equivalent);
    }

    #[test]
    fn default_window_has_41_by_41_cells() {
        let g = grid();
        assert_eq!(g.cells.len(), 41 * 41);
    }

    #[test]
    fn csv_is_deterministic() {
        let a = region_csv(&grid());
        let b = region_csv(&grid());
        assert_eq!(a, b);
        assert!(a.starts_with("x,y,verdict\n-5,5,"));
    }

    #[test]
    fn bad_bounds_are_rejected() {
        let order = OutcomePreorder::pareto_box();
        let r = Outcome::pair(rat_int(0), rat_int(0));
        assert!(region_grid(&order, &r, &rat_int(5), &rat_int(-5), &rat(1, 4)).is_err());
        assert!(region_grid(&order, &r, &rat_int(-5), &rat_int(5), &rat_int(0)).is_err());
    }
}
