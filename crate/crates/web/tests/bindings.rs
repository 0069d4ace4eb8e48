use alexsum_web::{compute_json, compute_view, hecke_matrix_json, matrix_view, states_json};

#[test]
fn figure_eight() {
    let view = compute_view("-2 1 -2 1", 0).unwrap();
    assert_eq!(view.strands, 3);
    assert_eq!(view.v, "-v^-2 + 3 - v^2");
    assert_eq!(view.z, "1 - z^2");
    assert!(view.methods.agree);
    assert_eq!(view.methods.statesum.as_deref(), Some(view.v.as_str()));
    assert_eq!(view.burau_agrees, Some(true));
}

#[test]
fn json_shapes() {
    let v: serde_json::Value = serde_json::from_str(&compute_json("1 1", 0).unwrap()).unwrap();
    assert_eq!(v["z"], "z");
    assert_eq!(v["half_integer_t"], true);
    assert_eq!(v["components"], 2);
    let unknot: serde_json::Value = serde_json::from_str(&compute_json("", 1).unwrap()).unwrap();
    assert_eq!(unknot["z"], "1");
    assert!(unknot["burau_agrees"].is_null());
    let rows: serde_json::Value =
        serde_json::from_str(&states_json("-2 1 -2 1", 3).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 6);
}

#[test]
fn long_words_skip_enumeration() {
    let view = compute_view(&"1 -2 ".repeat(10), 0).unwrap();
    assert!(view.methods.statesum.is_none());
    assert!(view.methods.agree);
    assert!(states_json(&"1 -2 ".repeat(10), 0).is_err());
}

#[test]
fn generator_matrices() {
    let m = matrix_view(3, 1, 2, false).unwrap();
    assert_eq!(m.basis, ["++-", "+-+"]);
    assert_eq!(m.rows.len(), 2);
    assert!(m.rows.iter().flatten().any(|e| e.contains('/')));
    let diag = matrix_view(3, 0, 1, true).unwrap();
    assert_eq!(diag.rows, [["v^-1"]]);
    assert!(hecke_matrix_json(3, 3, 1, false).is_err());
    assert!(hecke_matrix_json(3, 1, 3, false).is_err());
}

#[test]
fn errors_are_messages() {
    assert!(compute_json("1 q", 0).unwrap_err().contains("q"));
}
