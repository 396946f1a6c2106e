//! Reads a graph from JSON, embeds it and writes the embedding back out.

use faceopt::approx::approx_min_max_face;
use faceopt::io::{embedding_value, read_embedding, read_graph};

const GRAPH: &str = r#"{
  "vertices": ["a", "b", "c", "d"],
  "edges": [
    {"id": "ab", "ends": ["a", "b"]}, {"id": "bc", "ends": ["b", "c"]},
    {"id": "cd", "ends": ["c", "d"]}, {"id": "da", "ends": ["d", "a"]},
    {"id": "ac", "ends": ["a", "c"]}, {"id": "bd", "ends": ["b", "d"]}
  ]
}"#;

fn main() -> faceopt::Result<()> {
    let g = read_graph(GRAPH)?;
    let (rot, _) = approx_min_max_face(&g)?;
    let doc = embedding_value(&g, &rot)?;
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    assert_eq!(read_embedding(&g, &doc.to_string())?, rot);
    Ok(())
}
