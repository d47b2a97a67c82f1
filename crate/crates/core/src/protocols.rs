//! Semantic codec between typed beacon content and frame bits.
//!
//! Covers the eight supported location protocols (five standard-location,
//! three national-location), country codes, identities, coarse position
//! quantization in PDF-1, fine offsets in PDF-2 and BCH insertion. The bit
//! layouts are this crate's normative contract; see the field windows in
//! [`crate::bitframe::windows`].

use crate::bch::{gen_polys, CheckResult, CheckStatus};
use crate::bitframe::{windows, BeaconMode, Frame, FrameFormat};
use std::collections::HashMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProtocolError {
    #[error("country code {0} exceeds 1023")]
    CountryOutOfRange(u16),
    #[error("identity kind {identity} is not valid for protocol {protocol}")]
    IdentityMismatch {
        protocol: &'static str,
        identity: &'static str,
    },
    #[error("identity field {field}={value} exceeds its {bits}-bit range")]
    IdentityOverflow {
        field: &'static str,
        value: u64,
        bits: u32,
    },
    #[error("latitude {0} outside [-90, +90] or not finite")]
    BadLatitude(f64),
    #[error("longitude {0} outside [-180, +180] or not finite")]
    BadLongitude(f64),
    #[error("a position requires the long frame format")]
    PositionNeedsLongFormat,
    #[error("MID {0} out of range 0..=1023")]
    MidOutOfRange(u16),
}

/// Supported beacon protocols, named by class and identity kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Protocol {
    StdLocEpirbMmsi,
    StdLocEltIcao24,
    StdLocEltSerial,
    StdLocEpirbSerial,
    StdLocPlbSerial,
    NatLocElt,
    NatLocEpirb,
    NatLocPlb,
}

pub const ALL_PROTOCOLS: [Protocol; 8] = [
    Protocol::StdLocEpirbMmsi,
    Protocol::StdLocEltIcao24,
    Protocol::StdLocEltSerial,
    Protocol::StdLocEpirbSerial,
    Protocol::StdLocPlbSerial,
    Protocol::NatLocElt,
    Protocol::NatLocEpirb,
    Protocol::NatLocPlb,
];

impl Protocol {
    /// The 4-bit protocol code carried in frame bits 37-40.
    pub fn code(self) -> u8 {
        match self {
            Protocol::StdLocEpirbMmsi => 0b0010,
            Protocol::StdLocEltIcao24 => 0b0011,
            Protocol::StdLocEltSerial => 0b0100,
            Protocol::StdLocEpirbSerial => 0b0110,
            Protocol::StdLocPlbSerial => 0b0111,
            Protocol::NatLocElt => 0b1000,
            Protocol::NatLocEpirb => 0b1010,
            Protocol::NatLocPlb => 0b1011,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        ALL_PROTOCOLS.iter().copied().find(|p| p.code() == code)
    }

    pub fn is_national(self) -> bool {
        matches!(
            self,
            Protocol::NatLocElt | Protocol::NatLocEpirb | Protocol::NatLocPlb
        )
    }

    pub fn position_scheme(self) -> PositionScheme {
        if self.is_national() {
            PositionScheme::National
        } else {
            PositionScheme::Standard
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Protocol::StdLocEpirbMmsi => "std_loc_epirb_mmsi",
            Protocol::StdLocEltIcao24 => "std_loc_elt_icao24",
            Protocol::StdLocEltSerial => "std_loc_elt_serial",
            Protocol::StdLocEpirbSerial => "std_loc_epirb_serial",
            Protocol::StdLocPlbSerial => "std_loc_plb_serial",
            Protocol::NatLocElt => "nat_loc_elt",
            Protocol::NatLocEpirb => "nat_loc_epirb",
            Protocol::NatLocPlb => "nat_loc_plb",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        ALL_PROTOCOLS.iter().copied().find(|p| p.name() == name)
    }
}

/// Identity payload carried in PDF-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BeaconIdentity {
    /// Last six MMSI digits plus a specific-beacon number.
    MmsiTail { last6: u32, specific: u8 },
    /// 24-bit aircraft address.
    Icao24(u32),
    /// 20-bit serial number plus 4 auxiliary bits.
    Serial { serial: u32, aux: u8 },
    /// 18-bit nationally assigned identifier.
    NationalId(u32),
}

impl BeaconIdentity {
    pub fn kind(&self) -> &'static str {
        match self {
            BeaconIdentity::MmsiTail { .. } => "mmsi_tail",
            BeaconIdentity::Icao24(_) => "icao24",
            BeaconIdentity::Serial { .. } => "serial",
            BeaconIdentity::NationalId(_) => "national_id",
        }
    }

    fn validate(&self) -> Result<(), ProtocolError> {
        let check = |field: &'static str, value: u64, bits: u32, cap: u64| {
            if value > cap {
                Err(ProtocolError::IdentityOverflow { field, value, bits })
            } else {
                Ok(())
            }
        };
        match *self {
            BeaconIdentity::MmsiTail { last6, specific } => {
                check("mmsi_last6", last6 as u64, 20, 999_999)?;
                check("specific_beacon", specific as u64, 4, 15)
            }
            BeaconIdentity::Icao24(v) => check("icao24", v as u64, 24, (1 << 24) - 1),
            BeaconIdentity::Serial { serial, aux } => {
                check("serial", serial as u64, 20, (1 << 20) - 1)?;
                check("serial_aux", aux as u64, 4, 15)
            }
            BeaconIdentity::NationalId(v) => check("national_id", v as u64, 18, (1 << 18) - 1),
        }
    }

    /// 24-bit (standard) or 18-bit (national) field value.
    fn field_value(&self) -> u64 {
        match *self {
            BeaconIdentity::MmsiTail { last6, specific } => {
                ((last6 as u64) << 4) | specific as u64
            }
            BeaconIdentity::Icao24(v) => v as u64,
            BeaconIdentity::Serial { serial, aux } => ((serial as u64) << 4) | aux as u64,
            BeaconIdentity::NationalId(v) => v as u64,
        }
    }

    fn from_field(protocol: Protocol, value: u64) -> BeaconIdentity {
        match protocol {
            Protocol::StdLocEpirbMmsi => BeaconIdentity::MmsiTail {
                last6: (value >> 4) as u32,
                specific: (value & 0xF) as u8,
            },
            Protocol::StdLocEltIcao24 => BeaconIdentity::Icao24(value as u32),
            Protocol::StdLocEltSerial | Protocol::StdLocEpirbSerial | Protocol::StdLocPlbSerial => {
                BeaconIdentity::Serial {
                    serial: (value >> 4) as u32,
                    aux: (value & 0xF) as u8,
                }
            }
            Protocol::NatLocElt | Protocol::NatLocEpirb | Protocol::NatLocPlb => {
                BeaconIdentity::NationalId(value as u32)
            }
        }
    }

    fn matches_protocol(&self, protocol: Protocol) -> bool {
        match protocol {
            Protocol::StdLocEpirbMmsi => matches!(self, BeaconIdentity::MmsiTail { .. }),
            Protocol::StdLocEltIcao24 => matches!(self, BeaconIdentity::Icao24(_)),
            Protocol::StdLocEltSerial | Protocol::StdLocEpirbSerial | Protocol::StdLocPlbSerial => {
                matches!(self, BeaconIdentity::Serial { .. })
            }
            Protocol::NatLocElt | Protocol::NatLocEpirb | Protocol::NatLocPlb => {
                matches!(self, BeaconIdentity::NationalId(_))
            }
        }
    }
}

/// Geographic position in decimal degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Position {
    pub lat: f64,
    pub lon: f64,
}

impl Position {
    pub fn new(lat: f64, lon: f64) -> Result<Self, ProtocolError> {
        if !lat.is_finite() || !(-90.0..=90.0).contains(&lat) {
            return Err(ProtocolError::BadLatitude(lat));
        }
        if !lon.is_finite() || !(-180.0..=180.0).contains(&lon) {
            return Err(ProtocolError::BadLongitude(lon));
        }
        Ok(Position { lat, lon })
    }
}

/// Typed content to encode into a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct BeaconSpec {
    pub protocol: Protocol,
    /// Maritime Identification Digits, 0..=1023.
    pub country: u16,
    pub identity: BeaconIdentity,
    pub position: Option<Position>,
    /// 121.5 MHz homing transmitter present (long frames only).
    pub homing: bool,
    /// Position from an internal fix (standard-location long frames only).
    pub position_source_internal: bool,
    pub mode: BeaconMode,
    pub format: FrameFormat,
}

impl BeaconSpec {
    pub fn validate(&self) -> Result<(), ProtocolError> {
        if self.country > 1023 {
            return Err(ProtocolError::CountryOutOfRange(self.country));
        }
        if !self.identity.matches_protocol(self.protocol) {
            return Err(ProtocolError::IdentityMismatch {
                protocol: self.protocol.name(),
                identity: self.identity.kind(),
            });
        }
        self.identity.validate()?;
        if let Some(pos) = self.position {
            Position::new(pos.lat, pos.lon)?;
            if self.format != FrameFormat::Long {
                return Err(ProtocolError::PositionNeedsLongFormat);
            }
        }
        Ok(())
    }
}

/// Everything recovered from one frame. Decoding is total: malformed or
/// hostile content lands in `protocol: None` / unusable BCH status rather
/// than an error.
#[derive(Debug, Clone)]
pub struct BeaconReport {
    pub protocol: Option<Protocol>,
    /// Raw bits 37-40, kept even when the code is unknown.
    pub protocol_code: u8,
    pub country: u16,
    pub identity: Option<BeaconIdentity>,
    /// Coarse position with PDF-2 offsets applied; absent on the no-fix
    /// sentinel.
    pub position: Option<Position>,
    pub homing: bool,
    pub position_source_internal: bool,
    pub mode: Option<BeaconMode>,
    pub format: FrameFormat,
    /// Bits 26-85 of the *raw* frame as 15 hex digits.
    pub hex_id: String,
    pub bch1: CheckResult,
    pub bch2: Option<CheckResult>,
    pub raw_frame: Frame,
}

// ---------------------------------------------------------------------------
// Position quantization
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionScheme {
    /// 0.25° coarse grid, sign + 9/10 bit magnitudes.
    Standard,
    /// Degree + 2-minute coarse grid.
    National,
}

/// PDF-1 coarse bits plus PDF-2 offset bits for one position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionBits {
    /// 21 bits (standard, frame bits 65-85) or 27 bits (national, 59-85).
    pub coarse: Vec<u8>,
    /// 20 bits (frame bits 113-132), both schemes.
    pub offset: Vec<u8>,
}

/// Round to nearest integer with ties toward zero (input must be >= 0).
/// The tie test carries a small epsilon so that values reconstructed from
/// quantized bits — which sit a few ulp off the exact half-unit — re-encode
/// to the same cell instead of drifting one unit up.
fn round_ties_to_zero(x: f64) -> u64 {
    debug_assert!(x >= 0.0);
    let floor = x.floor();
    let frac = x - floor;
    if frac > 0.5 + 1e-9 {
        floor as u64 + 1
    } else {
        floor as u64
    }
}

fn push_uint(bits: &mut Vec<u8>, value: u64, width: usize) {
    for k in (0..width).rev() {
        bits.push(((value >> k) & 1) as u8);
    }
}

fn read_uint(bits: &[u8]) -> u64 {
    bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
}

/// One quantized axis: coarse cell in magnitude space plus a signed
/// refinement in 4-second units.
struct AxisQuant {
    sign_bit: u64,
    coarse_units: u64,
    /// Offset in 4-second units applied to the magnitude (signed).
    off_units: i64,
}

/// Quantize one axis value. `cells_per_deg` is the coarse grid (4 for the
/// 0.25° standard grid, 30 for the national 2-minute grid).
///
/// When a coarse cell spans an even number of 4-second units the halfway
/// point is representable from either neighbouring cell; `canonical_wrap`
/// (half a cell, in 4-second units) forces the lower-cell-plus-positive-
/// offset form so that re-encoding a decoded position is bit-stable.
fn quantize_axis(value: f64, cells_per_deg: f64, canonical_wrap: Option<i64>) -> AxisQuant {
    let sign_bit = (value < 0.0) as u64;
    let magnitude = value.abs();
    let mut coarse_units = round_ties_to_zero(magnitude * cells_per_deg);
    let delta = magnitude - coarse_units as f64 / cells_per_deg;
    let mut off_units = round_ties_to_zero(delta.abs() * 900.0) as i64;
    if delta < 0.0 {
        off_units = -off_units;
    }
    if let Some(wrap) = canonical_wrap {
        if off_units == -wrap {
            coarse_units -= 1;
            off_units = wrap;
        }
    }
    AxisQuant {
        sign_bit,
        coarse_units,
        off_units,
    }
}

/// Offset field for one axis: sign, whole minutes, 4-second units. The
/// standard scheme uses a 5-bit minute field; national uses 1 bit plus
/// 4 reserved zeros so both spell 10 bits. `off_units` refines the axis
/// magnitude; the emitted sign is relative to signed degrees.
fn encode_axis_offset(axis: &AxisQuant, scheme: PositionScheme) -> Vec<u8> {
    let signed_off = if axis.sign_bit == 1 {
        -axis.off_units
    } else {
        axis.off_units
    };
    let sign = (signed_off < 0) as u8;
    let units = signed_off.unsigned_abs();
    let minutes = units / 15;
    let secs = units % 15;
    let mut bits = Vec::with_capacity(10);
    bits.push(sign);
    match scheme {
        PositionScheme::Standard => {
            push_uint(&mut bits, minutes.min(30), 5);
            push_uint(&mut bits, secs, 4);
        }
        PositionScheme::National => {
            push_uint(&mut bits, minutes.min(1), 1);
            push_uint(&mut bits, secs, 4);
            push_uint(&mut bits, 0, 4); // reserved
        }
    }
    bits
}

fn decode_axis_offset(bits: &[u8], scheme: PositionScheme) -> f64 {
    debug_assert_eq!(bits.len(), 10);
    let sign = if bits[0] == 1 { -1.0 } else { 1.0 };
    let (minutes, secs) = match scheme {
        PositionScheme::Standard => (read_uint(&bits[1..6]), read_uint(&bits[6..10])),
        PositionScheme::National => (read_uint(&bits[1..2]), read_uint(&bits[2..6])),
    };
    sign * (minutes as f64 * 15.0 + secs as f64) / 900.0
}

/// Quantize a position (or the no-fix sentinel when `None`) into coarse
/// PDF-1 bits and PDF-2 offset bits.
pub fn encode_position(
    pos: Option<Position>,
    scheme: PositionScheme,
) -> Result<PositionBits, ProtocolError> {
    let coarse_len = match scheme {
        PositionScheme::Standard => 21,
        PositionScheme::National => 27,
    };
    let Some(pos) = pos else {
        return Ok(PositionBits {
            coarse: vec![1u8; coarse_len],
            offset: vec![0u8; 20],
        });
    };
    let pos = Position::new(pos.lat, pos.lon)?;

    let mut coarse = Vec::with_capacity(coarse_len);
    let mut offset = Vec::with_capacity(20);
    match scheme {
        PositionScheme::Standard => {
            // 0.25° cell = 225 four-second units (odd), no halfway point
            for (value, quarter_bits) in [(pos.lat, 9usize), (pos.lon, 10)] {
                let axis = quantize_axis(value, 4.0, None);
                coarse.push(axis.sign_bit as u8);
                push_uint(&mut coarse, axis.coarse_units, quarter_bits);
                offset.extend(encode_axis_offset(&axis, scheme));
            }
        }
        PositionScheme::National => {
            // 2-minute cell = 30 four-second units; canonicalize at 15
            for (value, deg_bits) in [(pos.lat, 7usize), (pos.lon, 8)] {
                let axis = quantize_axis(value, 30.0, Some(15));
                coarse.push(axis.sign_bit as u8);
                push_uint(&mut coarse, axis.coarse_units / 30, deg_bits);
                push_uint(&mut coarse, axis.coarse_units % 30, 5);
                offset.extend(encode_axis_offset(&axis, scheme));
            }
        }
    }
    Ok(PositionBits { coarse, offset })
}

/// Reconstruct a position from coarse bits plus optional offset bits.
/// Returns `None` on the no-fix sentinel (all coarse bits set).
pub fn decode_position(
    coarse: &[u8],
    offset: Option<&[u8]>,
    scheme: PositionScheme,
) -> Option<Position> {
    if coarse.iter().all(|&b| b == 1) {
        return None;
    }
    let (mut lat, mut lon) = match scheme {
        PositionScheme::Standard => {
            debug_assert_eq!(coarse.len(), 21);
            let lat_sign = if coarse[0] == 1 { -1.0 } else { 1.0 };
            let lat = lat_sign * read_uint(&coarse[1..10]) as f64 * 0.25;
            let lon_sign = if coarse[10] == 1 { -1.0 } else { 1.0 };
            let lon = lon_sign * read_uint(&coarse[11..21]) as f64 * 0.25;
            (lat, lon)
        }
        PositionScheme::National => {
            debug_assert_eq!(coarse.len(), 27);
            let lat_sign = if coarse[0] == 1 { -1.0 } else { 1.0 };
            let lat_deg = read_uint(&coarse[1..8]) as f64;
            let lat_2min = read_uint(&coarse[8..13]) as f64;
            let lon_sign = if coarse[13] == 1 { -1.0 } else { 1.0 };
            let lon_deg = read_uint(&coarse[14..22]) as f64;
            let lon_2min = read_uint(&coarse[22..27]) as f64;
            (
                lat_sign * (lat_deg + lat_2min / 30.0),
                lon_sign * (lon_deg + lon_2min / 30.0),
            )
        }
    };
    if let Some(off) = offset {
        debug_assert_eq!(off.len(), 20);
        lat += decode_axis_offset(&off[..10], scheme);
        lon += decode_axis_offset(&off[10..], scheme);
    }
    // hostile bit patterns can spell out-of-range values; clamp so the
    // result is always a usable Position
    Some(Position {
        lat: lat.clamp(-90.0, 90.0),
        lon: lon.clamp(-180.0, 180.0),
    })
}

// ---------------------------------------------------------------------------
// Frame codec
// ---------------------------------------------------------------------------

/// Fixed pattern in PDF-2 bits 107-110.
const PDF2_FIXED_PATTERN: u64 = 0b1101;

/// Encode a beacon spec into a complete frame with valid BCH fields.
pub fn encode_beacon(spec: &BeaconSpec) -> Result<Frame, ProtocolError> {
    spec.validate()?;
    let mut frame = Frame::blank(spec.format, spec.mode);
    let w = |r: Result<(), crate::bitframe::FrameError>| {
        r.expect("window writes are within range by construction")
    };

    w(frame.write(windows::PROTOCOL_FLAG, 0)); // location protocols
    w(frame.write(windows::COUNTRY, spec.country as u64));
    w(frame.write(windows::PROTOCOL_CODE, spec.protocol.code() as u64));

    let scheme = spec.protocol.position_scheme();
    let pos_bits = encode_position(spec.position, scheme)?;
    match scheme {
        PositionScheme::Standard => {
            w(frame.write(windows::STD_IDENTITY, spec.identity.field_value()));
            w(frame.write(windows::STD_POSITION, read_uint(&pos_bits.coarse)));
        }
        PositionScheme::National => {
            w(frame.write(windows::NAT_ID, spec.identity.field_value()));
            w(frame.write(windows::NAT_POSITION, read_uint(&pos_bits.coarse)));
        }
    }

    if spec.format == FrameFormat::Long {
        w(frame.write(windows::PDF2_FIXED, PDF2_FIXED_PATTERN));
        let flag = match scheme {
            PositionScheme::Standard => spec.position_source_internal as u64,
            PositionScheme::National => 0, // additional-data flag, default 0
        };
        w(frame.write(windows::PDF2_FLAG, flag));
        w(frame.write(windows::HOMING, spec.homing as u64));
        w(frame.write(windows::LAT_OFFSET, read_uint(&pos_bits.offset[..10])));
        w(frame.write(windows::LON_OFFSET, read_uint(&pos_bits.offset[10..])));
    } else {
        w(frame.write(windows::SHORT_TAIL, 0));
    }

    insert_bch(&mut frame);
    Ok(frame)
}

/// Compute and insert both parity fields for the frame's current content.
pub fn insert_bch(frame: &mut Frame) {
    let (bch1, bch2) = gen_polys();
    let pdf1: Vec<u8> = frame.as_bits()[24..85].to_vec();
    let parity1 = bch1.parity(&pdf1).expect("PDF-1 is 61 bits");
    for (i, &bit) in parity1.iter().enumerate() {
        frame.set_bit(86 + i, bit);
    }
    if frame.format() == FrameFormat::Long {
        let pdf2: Vec<u8> = frame.as_bits()[106..132].to_vec();
        let parity2 = bch2.parity(&pdf2).expect("PDF-2 is 26 bits");
        for (i, &bit) in parity2.iter().enumerate() {
            frame.set_bit(133 + i, bit);
        }
    }
}

/// Decode a frame into a report. Never fails: unknown protocol codes,
/// stale parity and damaged sync all land in the report rather than an
/// error, which is what makes the decoder a safe fuzzing target.
pub fn decode_frame(frame: &Frame) -> BeaconReport {
    let (bch1_code, bch2_code) = gen_polys();
    let hex_id = frame.hex_id();
    let format = frame.format();

    let cw1: Vec<u8> = frame.as_bits()[24..106].to_vec();
    let bch1 = bch1_code
        .check_and_correct(&cw1)
        .expect("BCH-1 codeword is 82 bits");
    let bch2 = (format == FrameFormat::Long).then(|| {
        let cw2: Vec<u8> = frame.as_bits()[106..144].to_vec();
        bch2_code
            .check_and_correct(&cw2)
            .expect("BCH-2 codeword is 38 bits")
    });

    // decode on corrected bits where correction succeeded
    let mut work = frame.clone();
    if bch1.status == CheckStatus::Corrected {
        for (i, &bit) in bch1.corrected_codeword.iter().enumerate() {
            work.set_bit(25 + i, bit);
        }
    }
    if let Some(r2) = &bch2 {
        if r2.status == CheckStatus::Corrected {
            for (i, &bit) in r2.corrected_codeword.iter().enumerate() {
                work.set_bit(107 + i, bit);
            }
        }
    }

    let rd = |win| work.read(win).expect("window fits format");
    let protocol_code = rd(windows::PROTOCOL_CODE) as u8;
    let protocol = Protocol::from_code(protocol_code);
    let country = rd(windows::COUNTRY) as u16;

    let mut identity = None;
    let mut position = None;
    let mut homing = false;
    let mut position_source_internal = false;

    if let Some(proto) = protocol {
        let scheme = proto.position_scheme();
        let (id_win, pos_win) = match scheme {
            PositionScheme::Standard => (windows::STD_IDENTITY, windows::STD_POSITION),
            PositionScheme::National => (windows::NAT_ID, windows::NAT_POSITION),
        };
        identity = Some(BeaconIdentity::from_field(proto, rd(id_win)));

        let coarse_len = pos_win.width() as usize;
        let mut coarse = Vec::with_capacity(coarse_len);
        push_uint(&mut coarse, rd(pos_win), coarse_len);

        let offset_bits = (format == FrameFormat::Long).then(|| {
            let mut off = Vec::with_capacity(20);
            push_uint(&mut off, rd(windows::LAT_OFFSET), 10);
            push_uint(&mut off, rd(windows::LON_OFFSET), 10);
            off
        });
        position = decode_position(&coarse, offset_bits.as_deref(), scheme);

        if format == FrameFormat::Long {
            homing = rd(windows::HOMING) == 1;
            if scheme == PositionScheme::Standard {
                position_source_internal = rd(windows::PDF2_FLAG) == 1;
            }
        }
    }

    BeaconReport {
        protocol,
        protocol_code,
        country,
        identity,
        position,
        homing,
        position_source_internal,
        mode: frame.mode(),
        format,
        hex_id,
        bch1,
        bch2,
        raw_frame: frame.clone(),
    }
}

// ---------------------------------------------------------------------------
// Country lookup
// ---------------------------------------------------------------------------

static MID_TABLE: OnceLock<HashMap<u16, &'static str>> = OnceLock::new();

fn mid_table() -> &'static HashMap<u16, &'static str> {
    MID_TABLE.get_or_init(|| {
        let mut map = HashMap::new();
        for line in include_str!("../data/mid.txt").lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some((mid, name)) = line.split_once(',') {
                if let Ok(mid) = mid.trim().parse::<u16>() {
                    map.insert(mid, name.trim());
                }
            }
        }
        map
    })
}

/// Country name for a Maritime Identification Digits code, `None` when the
/// code is unassigned.
pub fn country_name(mid: u16) -> Result<Option<&'static str>, ProtocolError> {
    if mid > 1023 {
        return Err(ProtocolError::MidOutOfRange(mid));
    }
    Ok(mid_table().get(&mid).copied())
}
