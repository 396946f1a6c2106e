//! JSON formats for graphs, embeddings, SPQR-trees and gadgets.
//!
//! Every document written here carries `"schema": "faceopt/1"`.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::embedding::{faces, head, tail, RotationSystem};
use crate::error::{Error, Result};
use crate::gadgets::GadgetGraph;
use crate::graph::Multigraph;
use crate::spqr::{Link, SpqrNode, SpqrTree};

pub const SCHEMA: &str = "faceopt/1";

#[derive(Deserialize)]
struct EdgeDoc {
    id: String,
    ends: [String; 2],
}

#[derive(Deserialize)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
}

#[derive(Deserialize)]
struct EmbeddingDoc {
    rotation: BTreeMap<String, Vec<String>>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

/// Reads `{"vertices": [...], "edges": [{"id": .., "ends": [u, v]}, ...]}`.
pub fn read_graph(text: &str) -> Result<Multigraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(parse_err)?;
    let edges: Vec<(&str, &str, &str)> =
        doc.edges.iter().map(|e| (e.id.as_str(), e.ends[0].as_str(), e.ends[1].as_str())).collect();
    let vertices: Vec<&str> = doc.vertices.iter().map(String::as_str).collect();
    Multigraph::new(&vertices, &edges)
}

pub fn graph_value(g: &Multigraph) -> Value {
    let edges: Vec<Value> = (0..g.m())
        .map(|e| {
            let (u, v) = g.ends(e);
            json!({"id": g.edge_id(e), "ends": [g.vertex_id(u), g.vertex_id(v)]})
        })
        .collect();
    json!({"schema": SCHEMA, "vertices": g.vertex_ids(), "edges": edges})
}

/// Rotation, faces with their edge sides, and the largest face size.
pub fn embedding_value(g: &Multigraph, rot: &RotationSystem) -> Result<Value> {
    let report = faces(g, rot)?;
    let rotation: BTreeMap<&str, Vec<&str>> =
        (0..g.n()).map(|v| (g.vertex_id(v), rot.at(v).iter().map(|&e| g.edge_id(e)).collect())).collect();
    let face_docs: Vec<Value> = report
        .faces
        .iter()
        .map(|f| {
            let sides: Vec<Value> = f
                .darts
                .iter()
                .map(|&d| {
                    let (u, v) = (tail(g.edge_ends(), d), head(g.edge_ends(), d));
                    json!([g.edge_id(d / 2), format!("{}->{}", g.vertex_id(u), g.vertex_id(v))])
                })
                .collect();
            json!({"size": f.size(), "sides": sides})
        })
        .collect();
    Ok(json!({"schema": SCHEMA, "rotation": rotation, "faces": face_docs, "max_face": report.max_face()}))
}

/// Reads the `rotation` field of an embedding document and validates it.
pub fn read_embedding(g: &Multigraph, text: &str) -> Result<RotationSystem> {
    let doc: EmbeddingDoc = serde_json::from_str(text).map_err(parse_err)?;
    let mut order = vec![Vec::new(); g.n()];
    for (vid, list) in &doc.rotation {
        let v = g.vertex_index(vid).ok_or_else(|| Error::UnknownVertex(vid.clone()))?;
        order[v] = list
            .iter()
            .map(|id| g.edge_index(id).ok_or_else(|| Error::Parse(format!("unknown edge {id}"))))
            .collect::<Result<_>>()?;
    }
    let rot = RotationSystem::new(g, order)?;
    faces(g, &rot)?;
    Ok(rot)
}

pub fn spqr_value(t: &SpqrTree) -> Value {
    let g = t.graph();
    let nodes: Vec<Value> = t
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, node)| {
            let edges: Vec<Value> = node
                .edges
                .iter()
                .enumerate()
                .map(|(x, e)| {
                    let ends = [g.vertex_id(e.ends.0), g.vertex_id(e.ends.1)];
                    match e.link {
                        Link::Real(r) => json!({"id": g.edge_id(r), "ends": ends}),
                        Link::Virtual { node: nb, .. } => {
                            json!({"id": SpqrNode::edge_label(i, x), "ends": ends, "node": nb})
                        }
                    }
                })
                .collect();
            json!({
                "id": i,
                "kind": format!("{:?}", node.kind),
                "parent": t.parent(i),
                "children": t.children(i),
                "edges": edges,
            })
        })
        .collect();
    json!({"schema": SCHEMA, "root": t.root(), "nodes": nodes})
}

pub fn gadget_value(gg: &GadgetGraph) -> Value {
    let mut v = graph_value(&gg.graph);
    let roles: BTreeMap<&str, String> =
        gg.roles.iter().enumerate().map(|(e, r)| (gg.graph.edge_id(e), format!("{r:?}"))).collect();
    v["roles"] = json!(roles);
    if let Some((s, t)) = gg.poles {
        v["poles"] = json!([gg.graph.vertex_id(s), gg.graph.vertex_id(t)]);
    }
    v
}
