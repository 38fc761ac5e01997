use alloc::vec::Vec;
use core::cmp::Ordering;

/// Machine tag carried by a data series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Machine {
    Wzcm,
    Scm,
    Acm,
}

impl Machine {
    pub fn as_str(self) -> &'static str {
        match self {
            Machine::Wzcm => "wzcm",
            Machine::Scm => "scm",
            Machine::Acm => "acm",
        }
    }
}

/// One point of a sweep. `None` outputs mark points where the quantity is undefined
/// (outside the admissible shrink region), never zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub inputs: Vec<f64>,
    pub outputs: Vec<Option<f64>>,
    pub degenerate: bool,
}

impl SweepRow {
    pub fn new(inputs: Vec<f64>, outputs: Vec<Option<f64>>) -> Self {
        SweepRow {
            inputs,
            outputs,
            degenerate: false,
        }
    }

    pub fn with_degenerate(mut self, degenerate: bool) -> Self {
        self.degenerate = degenerate;
        self
    }
}

fn cmp_inputs(a: &[f64], b: &[f64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Rows sorted lexicographically by input tuple, without duplicates.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSeries {
    pub machine: Machine,
    pub input_names: Vec<&'static str>,
    pub output_names: Vec<&'static str>,
    pub rows: Vec<SweepRow>,
}

impl SweepSeries {
    pub fn new(
        machine: Machine,
        input_names: Vec<&'static str>,
        output_names: Vec<&'static str>,
        mut rows: Vec<SweepRow>,
    ) -> Self {
        rows.sort_by(|a, b| cmp_inputs(&a.inputs, &b.inputs));
        rows.dedup_by(|a, b| cmp_inputs(&a.inputs, &b.inputs).is_eq());
        SweepSeries {
            machine,
            input_names,
            output_names,
            rows,
        }
    }

    /// Values of output column `k`, absent entries skipped.
    pub fn column(&self, k: usize) -> impl Iterator<Item = (&[f64], f64)> + '_ {
        self.rows
            .iter()
            .filter_map(move |r| r.outputs[k].map(|v| (r.inputs.as_slice(), v)))
    }
}
