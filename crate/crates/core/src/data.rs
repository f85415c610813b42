//! Random instance generation and sensor-event ingestion.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::Read;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::string::BinaryString;

/// Parameters of [`gen_random`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SparsityConfig {
    pub length: usize,
    /// Probability that a symbol differs from its predecessor.
    pub sparsity: f64,
    pub seed: u64,
}

impl SparsityConfig {
    pub fn new(length: usize, sparsity: f64, seed: u64) -> Result<Self> {
        if length == 0 {
            return Err(Error::EmptyString);
        }
        if !(0.0..=1.0).contains(&sparsity) {
            return Err(Error::Contract(format!(
                "sparsity {sparsity} outside [0, 1]"
            )));
        }
        Ok(Self {
            length,
            sparsity,
            seed,
        })
    }
}

/// Markov string: uniform first symbol, then each symbol flips its
/// predecessor with probability `sparsity`.
///
/// Uses ChaCha8 seeded through `SeedableRng::seed_from_u64`, so output is
/// stable across runs and platforms for a given crate version.
pub fn gen_random(config: &SparsityConfig) -> BinaryString {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut symbols = Vec::with_capacity(config.length);
    let mut current: u8 = rng.gen_range(0..=1);
    symbols.push(current);
    for _ in 1..config.length {
        if rng.gen_bool(config.sparsity) {
            current ^= 1;
        }
        symbols.push(current);
    }
    BinaryString::new(symbols).expect("length >= 1 and symbols are bits")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SensorEvent {
    /// Epoch milliseconds.
    pub timestamp: i64,
    pub sensor_id: String,
    pub state: u8,
}

/// Raw event values (e.g. `ON`, `OPEN`) mapped to binary states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateMap(HashMap<String, u8>);

impl StateMap {
    pub fn get(&self, raw: &str) -> Option<u8> {
        self.0.get(raw).copied()
    }
}

impl Default for StateMap {
    fn default() -> Self {
        "ON=1,OFF=0,OPEN=1,CLOSE=0"
            .parse()
            .expect("valid default map")
    }
}

impl FromStr for StateMap {
    type Err = Error;

    /// `ON=1,OFF=0,...`
    fn from_str(s: &str) -> Result<Self> {
        let mut map = HashMap::new();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (raw, state) = item
                .split_once('=')
                .ok_or_else(|| Error::Contract(format!("state map entry {item:?} lacks '='")))?;
            let state = match state.trim() {
                "0" => 0,
                "1" => 1,
                other => {
                    return Err(Error::Contract(format!(
                        "state map value {other:?} must be 0 or 1"
                    )))
                }
            };
            map.insert(raw.trim().to_string(), state);
        }
        if map.is_empty() {
            return Err(Error::Contract("empty state map".into()));
        }
        Ok(Self(map))
    }
}

fn is_header(first_field: &str) -> bool {
    let f = first_field.trim().to_ascii_lowercase();
    f.starts_with("timestamp") || f == "time"
}

/// Reads `timestamp_ms,sensor_id,value` records (comma- or tab-separated,
/// optional header row) and groups them per sensor, stably sorted by time.
pub fn parse_events<R: Read>(
    mut input: R,
    state_map: &StateMap,
) -> Result<BTreeMap<String, Vec<SensorEvent>>> {
    let mut text = String::new();
    input.read_to_string(&mut text).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })?;
    let delimiter = match text.lines().find(|l| !l.trim().is_empty()) {
        Some(l) if l.contains('\t') => b'\t',
        _ => b',',
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .delimiter(delimiter)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut grouped: BTreeMap<String, Vec<SensorEvent>> = BTreeMap::new();
    let mut unmapped = BTreeSet::new();
    for (idx, record) in reader.records().enumerate() {
        let line = idx + 1;
        let record = record.map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        if idx == 0 && is_header(&record[0]) {
            continue;
        }
        if record.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected 3 fields, found {}", record.len()),
            });
        }
        let timestamp: i64 = record[0].parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid timestamp {:?}", &record[0]),
        })?;
        let sensor_id = record[1].to_string();
        let Some(state) = state_map.get(&record[2]) else {
            unmapped.insert(record[2].to_string());
            continue;
        };
        grouped
            .entry(sensor_id.clone())
            .or_default()
            .push(SensorEvent {
                timestamp,
                sensor_id,
                state,
            });
    }
    if !unmapped.is_empty() {
        return Err(Error::UnmappedValues(unmapped.into_iter().collect()));
    }
    for events in grouped.values_mut() {
        events.sort_by_key(|e| e.timestamp);
    }
    Ok(grouped)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplingMode {
    /// The state held at the end of each interval.
    StateAtEnd,
    /// 1 iff at least one event falls inside the interval.
    EventInInterval,
}

impl FromStr for SamplingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "state-at-end" => Ok(SamplingMode::StateAtEnd),
            "event-in-interval" => Ok(SamplingMode::EventInInterval),
            other => Err(Error::Contract(format!("unknown sampling mode {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingConfig {
    /// Interval length in milliseconds.
    pub interval: i64,
    pub mode: SamplingMode,
    /// State assumed before a sensor's first event.
    pub initial_state: u8,
}

impl SamplingConfig {
    pub fn new(interval: i64, mode: SamplingMode) -> Result<Self> {
        if interval <= 0 {
            return Err(Error::Contract("sampling interval must be positive".into()));
        }
        Ok(Self {
            interval,
            mode,
            initial_state: 0,
        })
    }
}

/// Half-open time range `[start, end)` in epoch milliseconds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TimeSpan {
    pub start: i64,
    pub end: i64,
}

/// Samples one symbol per whole interval of `span`; a trailing partial
/// interval is dropped. `events` must be sorted by timestamp.
pub fn sample_to_string(
    events: &[SensorEvent],
    config: &SamplingConfig,
    span: TimeSpan,
) -> Result<BinaryString> {
    let intervals = if span.end > span.start {
        (span.end - span.start) / config.interval
    } else {
        0
    };
    if intervals == 0 {
        return Err(Error::Contract(format!(
            "span [{}, {}) holds no whole {} ms interval",
            span.start, span.end, config.interval
        )));
    }
    debug_assert!(events.windows(2).all(|w| w[0].timestamp <= w[1].timestamp));

    let mut symbols = Vec::with_capacity(intervals as usize);
    let mut next = 0;
    let mut state = config.initial_state;
    for i in 0..intervals {
        let lo = span.start + i * config.interval;
        let hi = lo + config.interval;
        let mut seen = false;
        while next < events.len() && events[next].timestamp < hi {
            if events[next].timestamp >= lo {
                seen = true;
            }
            state = events[next].state;
            next += 1;
        }
        symbols.push(match config.mode {
            SamplingMode::StateAtEnd => state,
            SamplingMode::EventInInterval => u8::from(seen),
        });
    }
    BinaryString::new(symbols)
}
