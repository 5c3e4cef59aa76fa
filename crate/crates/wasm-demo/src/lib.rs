//! Browser bindings. Every export takes and returns JSON strings; failures
//! come back as `{"error": "..."}` so the page never sees a thrown value.

use serde::{Deserialize, Serialize};
use twojoin_core::io::sniff_format;
use twojoin_core::{
    decompose_blocks, detect_2join, detect_nonpath_2join, gen, minimally_sided_2join, minimally_sided_nonpath_general,
    parse_graph, Graph, TwoJoinSplit,
};
use wasm_bindgen::prelude::*;

/// Largest graph the page accepts; the drawing is unreadable beyond this.
const MAX_DEMO_VERTICES: usize = 200;

#[derive(Serialize)]
struct GraphView {
    n: usize,
    edges: Vec<(usize, usize)>,
    text: String,
}

#[derive(Serialize, Deserialize, Clone)]
struct SplitView {
    x1: Vec<usize>,
    a1: Vec<usize>,
    b1: Vec<usize>,
    x2: Vec<usize>,
    a2: Vec<usize>,
    b2: Vec<usize>,
}

impl From<&TwoJoinSplit> for SplitView {
    fn from(s: &TwoJoinSplit) -> Self {
        SplitView {
            x1: s.x1.clone(),
            a1: s.a1.clone(),
            b1: s.b1.clone(),
            x2: s.x2.clone(),
            a2: s.a2.clone(),
            b2: s.b2.clone(),
        }
    }
}

impl From<SplitView> for TwoJoinSplit {
    fn from(s: SplitView) -> Self {
        TwoJoinSplit { x1: s.x1, a1: s.a1, b1: s.b1, x2: s.x2, a2: s.a2, b2: s.b2 }
    }
}

#[derive(Serialize)]
struct Detection {
    found: bool,
    split: Option<SplitView>,
}

#[derive(Serialize)]
struct BlockView {
    graph: GraphView,
    original: Vec<usize>,
    marker: Vec<usize>,
}

fn view(g: &Graph) -> GraphView {
    GraphView { n: g.n(), edges: g.edges().collect(), text: twojoin_core::io::write_edge_list(g) }
}

fn load(text: &str) -> Result<Graph, String> {
    let g = parse_graph(text, sniff_format(text)).map_err(|e| e.to_string())?;
    if g.n() > MAX_DEMO_VERTICES {
        return Err(format!("the demo draws at most {MAX_DEMO_VERTICES} vertices, got {}", g.n()));
    }
    Ok(g)
}

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("serializable"),
        Err(e) => serde_json::json!({ "error": e }).to_string(),
    }
}

fn generate_graph(family: &str, size: usize, seed: u32) -> Result<GraphView, String> {
    let g = match family {
        "cycle" => gen::cycle(size),
        "path" => gen::path(size),
        "complete" => gen::complete(size),
        "random" => gen::random_connected(size, 0.3, seed.into()),
        "double-cycle" => gen::double_cycle(size).map(|(g, _)| g),
        "double-hexagon" => Ok(gen::double_hexagon().0),
        "double-k4" => Ok(gen::double_k4().0),
        "figure1" => Ok(gen::figure1_graph()),
        other => return Err(format!("unknown family '{other}'")),
    }
    .map_err(|e| e.to_string())?;
    if g.n() > MAX_DEMO_VERTICES {
        return Err(format!("the demo draws at most {MAX_DEMO_VERTICES} vertices"));
    }
    Ok(view(&g))
}

fn detect_mode(text: &str, mode: &str) -> Result<Detection, String> {
    let g = load(text)?;
    let split = match mode {
        "any" => detect_2join(&g),
        "nonpath" => detect_nonpath_2join(&g),
        "minside" => minimally_sided_2join(&g),
        "minside-nonpath" => minimally_sided_nonpath_general(&g),
        other => return Err(format!("unknown mode '{other}'")),
    }
    .map_err(|e| e.to_string())?;
    Ok(Detection { found: split.is_some(), split: split.as_ref().map(SplitView::from) })
}

fn decompose_json(text: &str, split: &str, side: u8, length: usize) -> Result<BlockView, String> {
    let g = load(text)?;
    let s: SplitView = serde_json::from_str(split).map_err(|e| e.to_string())?;
    let (b1, b2) = decompose_blocks(&g, &s.into(), length).map_err(|e| e.to_string())?;
    let block = match side {
        1 => b1,
        2 => b2,
        _ => return Err("side must be 1 or 2".into()),
    };
    Ok(BlockView { graph: view(&block.graph), original: block.original, marker: block.marker })
}

/// `{n, edges, text}` for a generated graph.
#[wasm_bindgen]
pub fn generate(family: &str, size: usize, seed: u32) -> String {
    to_json(generate_graph(family, size, seed))
}

/// `{n, edges, text}` for an edge-list or DIMACS text.
#[wasm_bindgen]
pub fn parse(text: &str) -> String {
    to_json(load(text).map(|g| view(&g)))
}

/// `{found, split}`; mode is `any`, `nonpath`, `minside` or
/// `minside-nonpath`.
#[wasm_bindgen]
pub fn detect(text: &str, mode: &str) -> String {
    to_json(detect_mode(text, mode))
}

/// `{graph, original, marker}` for the block keeping `side` of `split`
/// (a JSON split as returned by [`detect`]).
#[wasm_bindgen]
pub fn decompose(text: &str, split: &str, side: u8, length: usize) -> String {
    to_json(decompose_json(text, split, side, length))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn json(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn generate_then_detect() {
        let g = json(&generate("cycle", 6, 0));
        assert_eq!(g["n"], 6);
        let text = g["text"].as_str().unwrap();
        let d = json(&detect(text, "any"));
        assert_eq!(d["found"], true);
        assert_eq!(d["split"]["x1"].as_array().unwrap().len(), 3);
        assert_eq!(json(&detect(text, "nonpath"))["found"], false);
    }

    #[test]
    fn decompose_round_trip() {
        let text = json(&generate("double-hexagon", 0, 0))["text"].as_str().unwrap().to_string();
        let d = json(&detect(&text, "nonpath"));
        let split = d["split"].to_string();
        let b = json(&decompose(&text, &split, 1, 3));
        let kept = b["original"].as_array().unwrap().len();
        assert_eq!(b["graph"]["n"], kept + 4);
        assert_eq!(b["marker"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn errors_are_json() {
        assert!(json(&parse("0 1\n1 x\n"))["error"].as_str().unwrap().contains("line 2"));
        assert!(json(&detect("0 1\n2 3\n", "any"))["error"].is_string());
        assert!(json(&detect("0 1\n", "bogus"))["error"].is_string());
        assert!(json(&generate("cycle", 500, 0))["error"].is_string());
        assert!(json(&decompose("0 1\n1 2\n", "{}", 1, 3))["error"].is_string());
    }
}
