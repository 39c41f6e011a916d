//! Holds the `acceptance` test target for the `almost-lie` crate.
