//! Batch verification runner with resumable JSONL output.
