//! Crate body intentionally empty: the acceptance checks live in
//! `tests/acceptance.rs`, one test per criterion, each printing a single
//! `criterion N: PASS/FAIL` line (visible with `--nocapture` and on failure).
