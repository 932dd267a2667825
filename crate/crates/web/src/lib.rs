//! Browser bindings for the static demo page in `www/`.
//!
//! Each exported function takes plain strings and numbers and returns a JSON
//! string; errors become JavaScript exceptions carrying the message. The
//! string-in, string-out functions without the `wasm_bindgen` wrapper are
//! public so they can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use deltaft_core::braid::BraidWord;
use deltaft_core::delta::{alt_sum, delta_n_witness, delta_trivialize, AltInvariant};
use deltaft_core::invariants::{
    alexander, closure_components, conway_a2, is_knot, jones, jones_series, linking_matrix,
};
use deltaft_core::lab::sample_gamma;

/// Longest word the page accepts; the bracket is exponential in the strand
/// count, not the length, but very long input makes the page unresponsive.
const MAX_LETTERS: usize = 400;
const MAX_STRANDS: usize = 8;

fn parse(word: &str) -> Result<BraidWord, String> {
    let b: BraidWord = word
        .trim()
        .parse()
        .map_err(|e: deltaft_core::Error| e.to_string())?;
    if b.len() > MAX_LETTERS || b.strands() > MAX_STRANDS {
        return Err(format!(
            "the demo takes at most {MAX_STRANDS} strands and {MAX_LETTERS} letters"
        ));
    }
    Ok(b)
}

fn text(e: deltaft_core::Error) -> String {
    e.to_string()
}

/// Closure data and invariants of one braid word.
pub fn describe(word: &str) -> Result<Value, String> {
    let b = parse(word)?;
    let comps = closure_components(&b);
    let mut out = json!({
        "word": b.to_string(),
        "permutation": b.permutation().to_string(),
        "components": comps.count,
        "linking": linking_matrix(&b).0,
        "writhe": b.writhe(),
        "jones": jones(&b).map_err(text)?.to_string(),
    });
    if is_knot(&b) {
        let series = jones_series(&b, 3).map_err(text)?;
        out["series"] = json!(series
            .coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>());
        out["alexander"] = json!(alexander(&b).map_err(text)?.format("t"));
        out["a2"] = json!(conway_a2(&b).map_err(text)?.to_string());
    }
    Ok(out)
}

/// Delta moves building a commutator-subgroup braid from a trivial word.
pub fn trivialize(word: &str) -> Result<Value, String> {
    let b = parse(word)?;
    let script = delta_trivialize(&b).map_err(text)?;
    let verified = script.verify().map_err(text)?;
    Ok(json!({
        "moves": script.moves.len(),
        "base_letters": script.base.len(),
        "verified": verified,
        "script": script,
    }))
}

/// A sampled `γ_n(P′)` element, its marked braid, and the alternating sum of
/// `invariant` (`series:D` or `a2`) over all subsets of site sets.
pub fn witness_sum(n: usize, strands: usize, seed: u64, invariant: &str) -> Result<Value, String> {
    if !(1..=3).contains(&n) || !(3..=5).contains(&strands) {
        return Err("the demo takes 1 <= n <= 3 and 3 <= strands <= 5".into());
    }
    let inv: AltInvariant = invariant.parse().map_err(text)?;
    let cert = sample_gamma(n, strands, seed, 1).map_err(text)?;
    let marked = delta_n_witness(&cert).map_err(text)?;
    let report = alt_sum(&marked, inv).map_err(text)?;
    let terms: Vec<Value> = report
        .terms
        .iter()
        .map(|t| {
            json!({
                "subset": t.subset,
                "sign": t.sign,
                "value": t.value.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "element": cert.evaluate().map_err(text)?.to_string(),
        "marked_letters": marked.base.len(),
        "sites": marked.site_sets.iter().map(Vec::len).collect::<Vec<_>>(),
        "invariant": report.invariant,
        "terms": terms,
        "total": report.total.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "vanishes": report.is_zero(),
    }))
}

fn export(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = describe)]
pub fn describe_js(word: &str) -> Result<String, JsValue> {
    export(describe(word))
}

#[wasm_bindgen(js_name = trivialize)]
pub fn trivialize_js(word: &str) -> Result<String, JsValue> {
    export(trivialize(word))
}

#[wasm_bindgen(js_name = witnessSum)]
pub fn witness_sum_js(n: u32, strands: u32, seed: u32, invariant: &str) -> Result<String, JsValue> {
    export(witness_sum(
        n as usize,
        strands as usize,
        seed as u64,
        invariant,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let v = describe("B2 1 1 1").unwrap();
        assert_eq!(v["jones"], "-t^4 + t^3 + t");
        assert_eq!(v["a2"], "1");
        assert_eq!(v["series"], json!(["1", "0", "-3", "-6"]));
        assert_eq!(v["components"], 1);
    }

    #[test]
    fn links_have_no_knot_fields() {
        let v = describe("B2 1 1").unwrap();
        assert_eq!(v["components"], 2);
        assert!(v.get("a2").is_none());
        assert_eq!(v["linking"], json!([[0, 1], [1, 0]]));
    }

    #[test]
    fn bad_input() {
        assert!(describe("3 1 2").is_err());
        assert!(describe("B9 1").is_err());
        assert!(trivialize("B3 1 1").is_err());
        assert!(witness_sum(4, 3, 0, "a2").is_err());
        assert!(witness_sum(1, 3, 0, "jones").is_err());
    }

    #[test]
    fn commutator_in_one_move() {
        let v = trivialize("B3 1 1 2 2 -1 -1 -2 -2").unwrap();
        assert_eq!(v["moves"], 1);
        assert_eq!(v["verified"], true);
    }

    #[test]
    fn witness_sums_vanish() {
        for n in 1..=2 {
            let v = witness_sum(n, 3, 4, &format!("series:{}", 2 * n - 1)).unwrap();
            assert_eq!(v["vanishes"], true);
            assert_eq!(v["terms"].as_array().unwrap().len(), 1 << n);
        }
        let v = witness_sum(2, 4, 1, "a2").unwrap();
        assert_eq!(v["vanishes"], true);
    }
}
