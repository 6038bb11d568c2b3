//! The fixed command lines run over the example corpus by the golden and
//! reproducibility tests. Paths are relative to the crate root.

pub struct Scenario {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

macro_rules! scenario {
    ($name:literal, $exit:literal, [$($arg:literal),* $(,)?]) => {
        Scenario { name: $name, args: &[$($arg),*], exit: $exit }
    };
}

pub const SCENARIOS: &[Scenario] = &[
    scenario!("verify_hopf_q", 0, ["verify", "hopf", "--algebra", "corpus/q.json"]),
    scenario!("verify_hopf_tensor", 0, ["verify", "hopf", "--algebra", "corpus/d4_tensor_q8_dual.json"]),
    scenario!("verify_hopf_broken", 1, ["verify", "hopf", "--algebra", "corpus/broken_antipode.json"]),
    scenario!("verify_algebra_m2", 0, ["verify", "algebra", "--algebra", "corpus/m2.json"]),
    scenario!("verify_algebra_ut2", 0, ["verify", "algebra", "--algebra", "corpus/ut2.json"]),
    scenario!("verify_algebra_e3", 0, ["verify", "algebra", "--algebra", "corpus/e3.json"]),
    scenario!("verify_algebra_q_dual_c2", 0, ["verify", "algebra", "--algebra", "corpus/q_dual_c2.json"]),
    scenario!("verify_algebra_m2_dual_c3", 0, ["verify", "algebra", "--algebra", "corpus/m2_dual_c3.json"]),
    scenario!("verify_algebra_ut2_graded", 0, ["verify", "algebra", "--algebra", "corpus/ut2_graded.json"]),
    scenario!("verify_algebra_qxq_graded", 0, ["verify", "algebra", "--algebra", "corpus/qxq_graded.json"]),
    scenario!("identity_q_commutator", 0, ["identity", "--algebra", "corpus/q.json", "--poly", "x1^1 x2^1 - x2^1 x1^1"]),
    scenario!("identity_m2_commutator", 1, ["identity", "--algebra", "corpus/m2.json", "--poly", "x1 x2 - x2 x1"]),
    scenario!("identity_e3_triple_commutator", 0, ["identity", "--algebra", "corpus/e3.json", "--poly", "x1 x2 x3 - x2 x1 x3 - x3 x1 x2 + x3 x2 x1"]),
    scenario!("identity_e3_square_central", 1, ["identity", "--algebra", "corpus/e3.json", "--poly", "x1 x1 x2 - x2 x1 x1"]),
    scenario!("identity_q_dual_c2_commutator", 0, ["identity", "--algebra", "corpus/q_dual_c2.json", "--poly", "x1^e x2^g - x2^g x1^e"]),
    scenario!("identity_bad_label", 2, ["identity", "--algebra", "corpus/q.json", "--poly", "x1^nope"]),
    scenario!("codim_m2_2", 0, ["codim", "--algebra", "corpus/m2.json", "--n", "2"]),
    scenario!("codim_ut2_3", 0, ["codim", "--algebra", "corpus/ut2.json", "--n", "3"]),
    scenario!("codim_e3_3", 0, ["codim", "--algebra", "corpus/e3.json", "--n", "3"]),
    scenario!("codim_q_dual_c2_2", 0, ["codim", "--algebra", "corpus/q_dual_c2.json", "--n", "2"]),
    scenario!("codim_budget", 3, ["codim", "--algebra", "corpus/m2.json", "--n", "3", "--budget", "10"]),
    scenario!("capelli_ut2", 0, ["capelli", "--algebra", "corpus/ut2.json", "--t", "4", "--n", "4"]),
    scenario!("capelli_m2_fails", 1, ["capelli", "--algebra", "corpus/m2.json", "--t", "3", "--n", "3"]),
    scenario!("kemer_ut2_witness", 0, ["kemer-search", "--algebra", "corpus/ut2.json", "--alpha", "2", "--s", "1", "--mu", "1", "--n", "5"]),
    scenario!("kemer_ut2_exhausted", 0, ["kemer-search", "--algebra", "corpus/ut2.json", "--alpha", "2", "--s", "2", "--n", "7"]),
    scenario!("kemer_missing_wedderburn", 2, ["kemer-search", "--algebra", "corpus/q_dual_c2.json", "--alpha", "1", "--s", "0"]),
    scenario!("exponent_m2", 0, ["exponent", "--algebra", "corpus/m2.json"]),
    scenario!("exponent_ut2", 0, ["exponent", "--algebra", "corpus/ut2.json", "--n", "3"]),
    scenario!("exponent_qxq", 0, ["exponent", "--algebra", "corpus/qxq.json"]),
    scenario!("envelope_ut2_graded", 0, ["envelope-check", "--algebra", "corpus/ut2_graded.json", "--k", "2", "--n", "2"]),
    scenario!("envelope_qxq_graded", 0, ["envelope-check", "--algebra", "corpus/qxq_graded.json", "--k", "2", "--n", "2"]),
    scenario!("envelope_needs_grading", 2, ["envelope-check", "--algebra", "corpus/ut2.json", "--k", "2"]),
    scenario!("tilde_ut2_odd_commutator", 0, ["tilde-check", "--algebra", "corpus/ut2_graded.json", "--k", "3", "--poly", "z1 z2 - z2 z1"]),
    scenario!("tilde_ut2_sample", 0, ["tilde-check", "--algebra", "corpus/ut2_graded.json", "--k", "3", "--seed", "7"]),
    scenario!("tilde_qxq_sample", 0, ["tilde-check", "--algebra", "corpus/qxq_graded.json", "--k", "3", "--seed", "7"]),
    scenario!("tilde_truncation_unsound", 2, ["tilde-check", "--algebra", "corpus/ut2_graded.json", "--k", "1", "--poly", "z1 z2"]),
    scenario!("trace_m2", 0, ["trace-check", "--algebra", "corpus/m2.json", "--poly", "corpus/m2_trace.poly"]),
    scenario!("trace_ut2", 0, ["trace-check", "--algebra", "corpus/ut2.json", "--poly", "corpus/ut2_trace.poly"]),
    scenario!("trace_m2_control", 1, ["trace-check", "--algebra", "corpus/m2.json", "--poly", "corpus/m2_control.poly"]),
];
