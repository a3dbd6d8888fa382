//! Deterministic JSON document for pipeline results.
//!
//! All sections are optional; maps are ordered, floats carry six decimals.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;
use crate::layout::Drawing;
use crate::planarize::PlanarResult;
use crate::reinsert::Layer;
use crate::rotation::Embedding;

#[derive(Debug, Clone, Serialize)]
pub struct JsonGraph {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JsonDummy {
    pub crossed: (usize, usize),
    pub inserted: (usize, usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct JsonLayer {
    pub index: usize,
    pub edges: Vec<usize>,
}

/// The stable output schema. Sections not produced by a command are omitted.
#[derive(Debug, Clone, Serialize, Default)]
pub struct Document {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<JsonGraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kept_cycles: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deleted_edges: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rim: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotation: Option<BTreeMap<String, Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rim_face: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dummies: Option<BTreeMap<String, JsonDummy>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossings: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layers: Option<Vec<JsonLayer>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coords: Option<BTreeMap<String, (f64, f64)>>,
}

fn six_decimals(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

impl Document {
    pub fn with_graph(mut self, g: &Graph) -> Self {
        self.graph = Some(JsonGraph {
            n: g.vertex_count(),
            m: g.edge_count(),
            edges: g.edges().map(|e| g.endpoints(e)).collect(),
        });
        self
    }

    pub fn with_planar_result(mut self, sys_cycles: &[Vec<usize>], result: &PlanarResult) -> Self {
        self.kept_cycles = Some(
            result
                .kept_indices()
                .iter()
                .map(|&i| sys_cycles[i - 1].clone())
                .collect(),
        );
        self.deleted_edges = Some(result.deleted_edges.clone());
        self.rim = Some(result.rim.to_vec());
        self
    }

    pub fn with_embedding(mut self, emb: &Embedding) -> Self {
        let mut rotation = BTreeMap::new();
        for v in emb.rotation.embedded_vertices() {
            rotation.insert(v.to_string(), emb.rotation.order(v).to_vec());
        }
        self.rotation = Some(rotation);
        self.faces = Some(emb.faces.clone());
        self.rim_face = emb.rim_face;
        self.dummies = Some(
            emb.dummies
                .iter()
                .map(|(&d, &(crossed, inserted))| (d.to_string(), JsonDummy { crossed, inserted }))
                .collect(),
        );
        self
    }

    pub fn with_layers(mut self, layers: &[Layer]) -> Self {
        self.layers = Some(
            layers
                .iter()
                .map(|l| JsonLayer {
                    index: l.index,
                    edges: l.edges.clone(),
                })
                .collect(),
        );
        self
    }

    pub fn with_drawing(mut self, drawing: &Drawing) -> Self {
        self.coords = Some(
            drawing
                .coords
                .iter()
                .map(|(&v, &(x, y))| (v.to_string(), (six_decimals(x), six_decimals(y))))
                .collect(),
        );
        self
    }

    pub fn with_crossings(mut self, crossings: usize) -> Self {
        self.crossings = Some(crossings);
        self
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("schema serializes");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::k5;
    use crate::cycles::enumerate_isometric_cycles;
    use crate::planarize::random_restart_pipeline;

    #[test]
    fn k5_result_reports_one_deleted_edge() {
        let g = k5();
        let sys = enumerate_isometric_cycles(&g).unwrap();
        let result = random_restart_pipeline(&g, &sys, 30, 4).unwrap();
        let lists: Vec<Vec<usize>> = sys.cycles().iter().map(|c| c.edge_ids()).collect();
        let doc = Document::default()
            .with_graph(&g)
            .with_planar_result(&lists, &result);
        assert_eq!(doc.deleted_edges.as_ref().unwrap().len(), 1);
        let text = doc.to_json();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["graph"]["n"], 5);
        assert_eq!(parsed["deleted_edges"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn empty_drawing_serializes_to_an_empty_map() {
        let drawing = Drawing {
            coords: Default::default(),
            fixed: Vec::new(),
        };
        let doc = Document::default().with_drawing(&drawing);
        let parsed: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert!(parsed["coords"].as_object().unwrap().is_empty());
    }

    #[test]
    fn output_is_deterministic_and_rounded() {
        let drawing = Drawing {
            coords: std::collections::BTreeMap::from([(1, (1.23456789, -0.000000123))]),
            fixed: Vec::new(),
        };
        let doc = Document::default().with_drawing(&drawing);
        let a = doc.to_json();
        let b = doc.to_json();
        assert_eq!(a, b);
        assert!(a.contains("1.234568"));
    }
}
