use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

/// `START:STOP:N`, N evenly spaced points including both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self, String> {
        if !(start.is_finite() && stop.is_finite()) {
            return Err(format!("grid bounds must be finite, got {start}:{stop}"));
        }
        if count < 2 {
            return Err(format!("grid needs at least 2 points, got {count}"));
        }
        if !(stop > start) {
            return Err(format!("grid stop {stop} must exceed start {start}"));
        }
        Ok(Self { start, stop, count })
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i == self.count - 1 {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * i as f64 / last
                }
            })
            .collect()
    }

    pub fn to_json(self) -> Value {
        json!({ "start": self.start, "stop": self.stop, "count": self.count })
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, count] = parts.as_slice() else {
            return Err(format!("expected START:STOP:N, got {s:?}"));
        };
        let start: f64 = start.trim().parse().map_err(|_| format!("bad grid start {start:?}"))?;
        let stop: f64 = stop.trim().parse().map_err(|_| format!("bad grid stop {stop:?}"))?;
        let count: usize = count.trim().parse().map_err(|_| format!("bad grid count {count:?}"))?;
        Self::new(start, stop, count)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.count)
    }
}
