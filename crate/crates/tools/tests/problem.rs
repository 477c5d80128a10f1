use mbqc_tools::catalog::catalog_entry;
use mbqc_tools::problem::{parse_problem, LoadError, ProblemSpec};

fn spec_error(json: &str) -> String {
    match parse_problem(json) {
        Err(LoadError::Spec(e)) => e.to_string(),
        other => panic!("expected a validation error, got {other:?}"),
    }
}

const BASE: &str = r#"{
  "num_qubits": 2,
  "initial_state": {"type": "zero"},
  "period": [{"pauli": "XX", "angle": 0.3, "group": "a"}, {"pauli": "ZI", "angle": "b"}],
  "trotter_steps": 2
}"#;

fn with(field: &str, value: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(BASE).unwrap();
    let mut target = &mut v;
    let parts: Vec<&str> = field.split('.').collect();
    for p in &parts[..parts.len() - 1] {
        target = match p.parse::<usize>() {
            Ok(i) => &mut target[i],
            Err(_) => &mut target[*p],
        };
    }
    target[parts[parts.len() - 1]] = serde_json::from_str(value).unwrap();
    v.to_string()
}

#[test]
fn minimal_document_loads_with_defaults() {
    let p = parse_problem(BASE).unwrap();
    assert_eq!(p.sequence.period_len(), 2);
    assert_eq!(p.sequence.steps(), 2);
    assert_eq!(p.target_memory(), 2);
    assert_eq!(p.symbols(), vec!["b".to_string()]);
    assert_eq!(p.group_sizes(), vec![1, 1, 1, 1]);
}

#[test]
fn errors_name_the_field_and_index() {
    assert_eq!(spec_error(&with("period", "[]")), "period: must not be empty");
    assert!(spec_error(&with("period.1.pauli", "\"ZII\"")).starts_with("period[1].pauli: width 3"));
    assert!(spec_error(&with("period.0.pauli", "\"XQ\"")).starts_with("period[0].pauli:"));
    assert!(spec_error(&with("period.1.pauli", "\"-ZI\"")).starts_with("period[1].pauli: generator must carry no sign"));
    assert!(spec_error(&with("trotter_steps", "0")).starts_with("trotter_steps"));
    assert!(spec_error(&with("observables", "[\"XX\", \"II\"]")).starts_with("observables[1]"));
    assert!(spec_error(&with("anneal", "{\"cooling_rate\": 1.5}")).starts_with("anneal.cooling_rate"));
    assert!(spec_error(&with("initial_state", "{\"type\": \"graph\", \"edges\": [[0, 2]]}")).starts_with("initial_state.edges[0]"));
    assert!(spec_error(&with("initial_state", "{\"type\": \"graph\", \"edges\": [], \"vops\": [\"H\", \"Q\"]}")).starts_with("initial_state.vops[1]"));
    assert!(spec_error(&with("initial_state", "{\"type\": \"tableau\", \"rows\": [\"XX\", \"ZI\"]}")).starts_with("initial_state.rows"));
}

#[test]
fn declared_groups_must_commute() {
    let json = with("period.1.group", "\"a\"");
    let msg = spec_error(&json);
    assert!(msg.starts_with("period[1].group"), "{msg}");
}

#[test]
fn schema_violations_are_reported() {
    assert!(matches!(parse_problem("{\"num_qubits\": 2}"), Err(LoadError::Json(_))));
    assert!(matches!(parse_problem(&with("extra", "1")), Err(LoadError::Json(_))));
}

#[test]
fn tableau_and_graph_initial_states_agree() {
    let t = with("initial_state", "{\"type\": \"tableau\", \"rows\": [\"XZ\", \"ZX\"]}");
    let g = with("initial_state", "{\"type\": \"graph\", \"edges\": [[0, 1]]}");
    let (a, b) = (parse_problem(&t).unwrap(), parse_problem(&g).unwrap());
    assert!(a.initial.same_group(&b.initial).unwrap());
}

#[test]
fn spec_round_trips_through_json() {
    let p = parse_problem(BASE).unwrap();
    let text = serde_json::to_string(&p.spec).unwrap();
    let back: ProblemSpec = serde_json::from_str(&text).unwrap();
    assert_eq!(back, p.spec);
}

#[test]
fn bound_sequences_are_seeded() {
    let p = catalog_entry("cqca_n3").unwrap().validate().unwrap();
    assert_eq!(p.bound_sequence(4), p.bound_sequence(4));
    assert_ne!(p.bound_sequence(4), p.bound_sequence(5));
    assert!(p.bound_sequence(4).numeric_angles().is_ok());
}
