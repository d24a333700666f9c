//! Browser bindings for the interactive demo page: comparison-region grids,
//! scenario replays, and dominance queries, all returning JSON or CSV
//! strings so the page needs no framework.

use wasm_bindgen::prelude::*;

use negdom::json::{DominanceReportJson, LotteryJson, ScenarioResultJson};
use negdom::lottery::Outcome;
use negdom::order::OutcomePreorder;
use negdom::rational::parse_rational;
use negdom::scenarios::{replay, ReplayParams, ScenarioId};

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Classifies the grid `[min, max]^2` (step `step`) against the reference
/// point under an order spec (`"pareto"` or `"lines:L,M"`); returns the
/// `x,y,verdict` CSV.
#[wasm_bindgen]
pub fn region_csv(
    order_spec: &str,
    ref_x: &str,
    ref_y: &str,
    min: &str,
    max: &str,
    step: &str,
) -> Result<String, JsValue> {
    let order = OutcomePreorder::parse_spec(order_spec).map_err(err)?;
    let reference = Outcome::pair(
        parse_rational(ref_x).map_err(err)?,
        parse_rational(ref_y).map_err(err)?,
    );
    let grid = negdom::region::region_grid(
        &order,
        &reference,
        &parse_rational(min).map_err(err)?,
        &parse_rational(max).map_err(err)?,
        &parse_rational(step).map_err(err)?,
    )
    .map_err(err)?;
    Ok(negdom::region::region_csv(&grid))
}

/// Runs a scenario replay; `params_json` may override `a`, `b`, `k`, `l`,
/// `m`, `epsilon` (strings, `"p/q"`). Returns the full result JSON.
#[wasm_bindgen]
pub fn replay_json(id: &str, params_json: &str) -> Result<String, JsValue> {
    let id = ScenarioId::parse(id).map_err(err)?;
    let mut params = ReplayParams::default();
    if !params_json.trim().is_empty() {
        let doc: serde_json::Value = serde_json::from_str(params_json).map_err(err)?;
        let read = |key: &str| -> Result<Option<negdom::rational::Rational>, JsValue> {
            match doc.get(key) {
                Some(serde_json::Value::String(s)) if !s.is_empty() => {
                    Ok(Some(parse_rational(s).map_err(err)?))
                }
                _ => Ok(None),
            }
        };
        params.a = read("a")?;
        params.b = read("b")?;
        params.k = read("k")?;
        params.l = read("l")?;
        params.m = read("m")?;
        params.epsilon = read("epsilon")?;
    }
    let result = replay(id, &params).map_err(err)?;
    serde_json::to_string(&ScenarioResultJson::from_result(&result)).map_err(err)
}

/// Decides stochastic dominance between two lottery JSON documents under an
/// order spec; returns the dominance report JSON (with the witness coupling
/// when dominance holds).
#[wasm_bindgen]
pub fn dominance_json(order_spec: &str, f_json: &str, g_json: &str) -> Result<String, JsValue> {
    let order = OutcomePreorder::parse_spec(order_spec).map_err(err)?;
    let f: LotteryJson = serde_json::from_str(f_json).map_err(err)?;
    let g: LotteryJson = serde_json::from_str(g_json).map_err(err)?;
    let f = f.to_lottery().map_err(err)?;
    let g = g.to_lottery().map_err(err)?;
    let verdict = negdom::dominance::check_stochastic_dominance(&f, &g, &order).map_err(err)?;
    let doc = DominanceReportJson::from_verdict(&order.spec_string(), "coupling", &verdict);
    serde_json::to_string(&doc).map_err(err)
}

/// The scenario ids the demo page offers.
#[wasm_bindgen]
pub fn scenario_ids() -> String {
    ScenarioId::ALL
        .iter()
        .map(|id| id.as_str())
        .collect::<Vec<_>>()
        .join(",")
}
