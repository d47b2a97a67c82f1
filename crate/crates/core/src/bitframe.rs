//! Bit-exact container for 406 MHz beacon frames.
//!
//! A frame is 112 bits (short) or 144 bits (long), indexed 1-based to match
//! the usual field tables: bits 1-15 are the all-ones bit sync, bits 16-24
//! the frame sync word, bit 25 the format flag (0 = short, 1 = long).
//! Field windows are read and written as big-endian unsigned integers.

use thiserror::Error;

/// Frame sync word transmitted by an operational beacon.
pub const SYNC_NORMAL: [u8; 9] = [0, 0, 0, 1, 0, 1, 1, 1, 1];
/// Frame sync word transmitted in self-test mode; ignored by rescue
/// infrastructure.
pub const SYNC_SELF_TEST: [u8; 9] = [0, 1, 1, 0, 1, 0, 0, 0, 0];

pub const SHORT_BITS: usize = 112;
pub const LONG_BITS: usize = 144;
/// Bit-sync ones plus frame-sync word.
pub const PREAMBLE_BITS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameFormat {
    Short,
    Long,
}

impl FrameFormat {
    pub fn bit_len(self) -> usize {
        match self {
            FrameFormat::Short => SHORT_BITS,
            FrameFormat::Long => LONG_BITS,
        }
    }

    pub fn from_bit_len(len: usize) -> Option<Self> {
        match len {
            SHORT_BITS => Some(FrameFormat::Short),
            LONG_BITS => Some(FrameFormat::Long),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BeaconMode {
    Normal,
    SelfTest,
}

impl BeaconMode {
    pub fn sync_word(self) -> &'static [u8; 9] {
        match self {
            BeaconMode::Normal => &SYNC_NORMAL,
            BeaconMode::SelfTest => &SYNC_SELF_TEST,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("window {name} ({first}..={last}) out of range for a {len}-bit frame")]
    WindowOutOfRange {
        name: &'static str,
        first: u16,
        last: u16,
        len: usize,
    },
    #[error("value {value:#x} does not fit in the {width}-bit window {name}")]
    ValueOverflow {
        name: &'static str,
        width: u16,
        value: u64,
    },
    #[error("frame must be 112 or 144 bits, got {0}")]
    BadBitLength(usize),
    #[error("hex frame must be 28 or 36 digits, got {0}")]
    BadHexLength(usize),
    #[error("non-hex character {0:?}")]
    NonHexChar(char),
    #[error("bit sync violated: bits 1-15 must all be 1")]
    BitSyncViolation,
    #[error("frame sync word matches neither normal nor self-test pattern")]
    FrameSyncViolation,
    #[error("format flag (bit 25) inconsistent with frame length {0}")]
    FormatFlagMismatch(usize),
}

/// Named, 1-indexed inclusive bit range inside a frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldWindow {
    pub name: &'static str,
    pub first_bit: u16,
    pub last_bit: u16,
}

impl FieldWindow {
    pub const fn new(name: &'static str, first_bit: u16, last_bit: u16) -> Self {
        assert!(1 <= first_bit && first_bit <= last_bit && last_bit <= 144);
        FieldWindow {
            name,
            first_bit,
            last_bit,
        }
    }

    pub const fn width(&self) -> u16 {
        self.last_bit - self.first_bit + 1
    }
}

/// Windows shared by every supported frame layout.
pub mod windows {
    use super::FieldWindow;

    pub const BIT_SYNC: FieldWindow = FieldWindow::new("bit_sync", 1, 15);
    pub const FRAME_SYNC: FieldWindow = FieldWindow::new("frame_sync", 16, 24);
    pub const FORMAT_FLAG: FieldWindow = FieldWindow::new("format_flag", 25, 25);
    pub const PROTOCOL_FLAG: FieldWindow = FieldWindow::new("protocol_flag", 26, 26);
    pub const COUNTRY: FieldWindow = FieldWindow::new("country", 27, 36);
    pub const PROTOCOL_CODE: FieldWindow = FieldWindow::new("protocol_code", 37, 40);
    pub const HEX_ID: FieldWindow = FieldWindow::new("hex_id", 26, 85);
    pub const PDF1: FieldWindow = FieldWindow::new("pdf1", 25, 85);
    pub const BCH1: FieldWindow = FieldWindow::new("bch1", 86, 106);
    pub const PDF2: FieldWindow = FieldWindow::new("pdf2", 107, 132);
    pub const BCH2: FieldWindow = FieldWindow::new("bch2", 133, 144);
    /// Non-protected tail of a short frame.
    pub const SHORT_TAIL: FieldWindow = FieldWindow::new("short_tail", 107, 112);

    // Standard-location layout.
    pub const STD_IDENTITY: FieldWindow = FieldWindow::new("std_identity", 41, 64);
    pub const STD_LAT_SIGN: FieldWindow = FieldWindow::new("std_lat_sign", 65, 65);
    pub const STD_LAT_COARSE: FieldWindow = FieldWindow::new("std_lat_coarse", 66, 74);
    pub const STD_LON_SIGN: FieldWindow = FieldWindow::new("std_lon_sign", 75, 75);
    pub const STD_LON_COARSE: FieldWindow = FieldWindow::new("std_lon_coarse", 76, 85);
    pub const STD_POSITION: FieldWindow = FieldWindow::new("std_position", 65, 85);

    // National-location layout.
    pub const NAT_ID: FieldWindow = FieldWindow::new("national_id", 41, 58);
    pub const NAT_LAT_SIGN: FieldWindow = FieldWindow::new("nat_lat_sign", 59, 59);
    pub const NAT_LAT_DEG: FieldWindow = FieldWindow::new("nat_lat_deg", 60, 66);
    pub const NAT_LAT_2MIN: FieldWindow = FieldWindow::new("nat_lat_2min", 67, 71);
    pub const NAT_LON_SIGN: FieldWindow = FieldWindow::new("nat_lon_sign", 72, 72);
    pub const NAT_LON_DEG: FieldWindow = FieldWindow::new("nat_lon_deg", 73, 80);
    pub const NAT_LON_2MIN: FieldWindow = FieldWindow::new("nat_lon_2min", 81, 85);
    pub const NAT_POSITION: FieldWindow = FieldWindow::new("nat_position", 59, 85);

    // Second protected data field (long frames).
    pub const PDF2_FIXED: FieldWindow = FieldWindow::new("pdf2_fixed", 107, 110);
    pub const PDF2_FLAG: FieldWindow = FieldWindow::new("pdf2_flag", 111, 111);
    pub const HOMING: FieldWindow = FieldWindow::new("homing", 112, 112);
    pub const LAT_OFFSET: FieldWindow = FieldWindow::new("lat_offset", 113, 122);
    pub const LON_OFFSET: FieldWindow = FieldWindow::new("lon_offset", 123, 132);
}

/// One on-air message as an ordered bit sequence.
///
/// Bits are stored unpacked (one byte per bit, values 0/1) and addressed
/// 1-based. `from_bits` enforces the sync invariants; `from_bits_raw`
/// only checks the length, which is what demodulator output and fuzzing
/// need.
#[derive(Clone, PartialEq, Eq)]
pub struct Frame {
    bits: [u8; LONG_BITS],
    len: usize,
}

impl std::fmt::Debug for Frame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Frame({} bits, {})", self.len, self.to_hex())
    }
}

impl Frame {
    /// Empty frame of the given format and mode, with bit sync, frame sync
    /// and the format flag already in place. All other bits are zero.
    pub fn blank(format: FrameFormat, mode: BeaconMode) -> Self {
        let mut bits = [0u8; LONG_BITS];
        for b in bits.iter_mut().take(15) {
            *b = 1;
        }
        bits[15..24].copy_from_slice(mode.sync_word());
        if format == FrameFormat::Long {
            bits[24] = 1;
        }
        Frame {
            bits,
            len: format.bit_len(),
        }
    }

    /// Build from a bit slice, enforcing the frame invariants.
    pub fn from_bits(bits: &[u8]) -> Result<Self, FrameError> {
        let frame = Self::from_bits_raw(bits)?;
        frame.check_invariants()?;
        Ok(frame)
    }

    /// Build from a bit slice checking only the length. Sync words and the
    /// format flag may be arbitrary; `mode()` reports what is actually there.
    pub fn from_bits_raw(bits: &[u8]) -> Result<Self, FrameError> {
        if FrameFormat::from_bit_len(bits.len()).is_none() {
            return Err(FrameError::BadBitLength(bits.len()));
        }
        let mut arr = [0u8; LONG_BITS];
        for (dst, &src) in arr.iter_mut().zip(bits) {
            *dst = if src == 0 { 0 } else { 1 };
        }
        Ok(Frame {
            bits: arr,
            len: bits.len(),
        })
    }

    fn check_invariants(&self) -> Result<(), FrameError> {
        if self.bits[..15].iter().any(|&b| b == 0) {
            return Err(FrameError::BitSyncViolation);
        }
        if self.mode().is_none() {
            return Err(FrameError::FrameSyncViolation);
        }
        let flag_long = self.bits[24] == 1;
        if flag_long != (self.len == LONG_BITS) {
            return Err(FrameError::FormatFlagMismatch(self.len));
        }
        Ok(())
    }

    pub fn bit_len(&self) -> usize {
        self.len
    }

    pub fn format(&self) -> FrameFormat {
        FrameFormat::from_bit_len(self.len).expect("length checked at construction")
    }

    /// Mode derived from the frame sync word; `None` if it matches neither
    /// pattern (possible on raw frames).
    pub fn mode(&self) -> Option<BeaconMode> {
        let sync = &self.bits[15..24];
        if sync == SYNC_NORMAL {
            Some(BeaconMode::Normal)
        } else if sync == SYNC_SELF_TEST {
            Some(BeaconMode::SelfTest)
        } else {
            None
        }
    }

    /// True when bit sync, frame sync and format flag all hold.
    pub fn sync_ok(&self) -> bool {
        self.check_invariants().is_ok()
    }

    pub fn as_bits(&self) -> &[u8] {
        &self.bits[..self.len]
    }

    /// Single bit, 1-indexed. Panics if out of range.
    pub fn bit(&self, pos: usize) -> u8 {
        assert!(pos >= 1 && pos <= self.len, "bit index {pos} out of range");
        self.bits[pos - 1]
    }

    pub fn set_bit(&mut self, pos: usize, value: u8) {
        assert!(pos >= 1 && pos <= self.len, "bit index {pos} out of range");
        self.bits[pos - 1] = if value == 0 { 0 } else { 1 };
    }

    fn check_window(&self, window: FieldWindow) -> Result<(), FrameError> {
        if window.last_bit as usize > self.len {
            return Err(FrameError::WindowOutOfRange {
                name: window.name,
                first: window.first_bit,
                last: window.last_bit,
                len: self.len,
            });
        }
        Ok(())
    }

    /// Big-endian unsigned value of the window (first bit is the MSB).
    pub fn read(&self, window: FieldWindow) -> Result<u64, FrameError> {
        self.check_window(window)?;
        debug_assert!(window.width() <= 64);
        let mut v = 0u64;
        for pos in window.first_bit..=window.last_bit {
            v = (v << 1) | self.bits[pos as usize - 1] as u64;
        }
        Ok(v)
    }

    /// Write a big-endian unsigned value into the window, leaving all other
    /// bits untouched.
    pub fn write(&mut self, window: FieldWindow, value: u64) -> Result<(), FrameError> {
        self.check_window(window)?;
        let width = window.width();
        if width < 64 && value >> width != 0 {
            return Err(FrameError::ValueOverflow {
                name: window.name,
                width,
                value,
            });
        }
        for (i, pos) in (window.first_bit..=window.last_bit).enumerate() {
            self.bits[pos as usize - 1] = ((value >> (width - 1 - i as u16)) & 1) as u8;
        }
        Ok(())
    }

    /// The 15-digit beacon identifier: bits 26-85 as uppercase hex, bit 26
    /// being the most significant bit.
    pub fn hex_id(&self) -> String {
        hex_of_bits(&self.bits[25..85])
    }

    /// Whole frame as uppercase hex, 28 digits short / 36 long, bit 1 being
    /// the MSB of the first digit.
    pub fn to_hex(&self) -> String {
        hex_of_bits(self.as_bits())
    }

    /// Parse the hex serialization back into a validated frame.
    pub fn from_hex(text: &str) -> Result<Self, FrameError> {
        let bits = bits_of_hex(text)?;
        Self::from_bits(&bits)
    }

    /// Parse hex into a frame without sync validation (corpus/fuzz input).
    pub fn from_hex_raw(text: &str) -> Result<Self, FrameError> {
        let bits = bits_of_hex(text)?;
        Self::from_bits_raw(&bits)
    }
}

/// Render a bit slice (MSB first) as uppercase hex. The length must be a
/// multiple of 4.
pub fn hex_of_bits(bits: &[u8]) -> String {
    debug_assert!(bits.len() % 4 == 0);
    bits.chunks(4)
        .map(|nib| {
            let v = (nib[0] << 3) | (nib[1] << 2) | (nib[2] << 1) | nib[3];
            char::from_digit(v as u32, 16).unwrap().to_ascii_uppercase()
        })
        .collect()
}

/// Parse 28 or 36 hex digits into a frame-sized bit vector.
pub fn bits_of_hex(text: &str) -> Result<Vec<u8>, FrameError> {
    let text = text.trim();
    let ndigits = text.chars().count();
    if ndigits != SHORT_BITS / 4 && ndigits != LONG_BITS / 4 {
        return Err(FrameError::BadHexLength(ndigits));
    }
    let mut bits = Vec::with_capacity(ndigits * 4);
    for c in text.chars() {
        let v = c
            .to_digit(16)
            .ok_or(FrameError::NonHexChar(c))? as u8;
        for shift in (0..4).rev() {
            bits.push((v >> shift) & 1);
        }
    }
    Ok(bits)
}

/// One sync-pattern hit inside a raw bitstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyncHit {
    /// 0-based offset of the first bit-sync bit.
    pub offset: usize,
    pub mode: BeaconMode,
}

/// Find every offset where 15 ones followed by a frame-sync word occur.
/// Exact matching; see [`find_sync_tolerant`] for noisy streams.
pub fn find_sync(stream: &[u8]) -> Vec<SyncHit> {
    find_sync_tolerant(stream, 0)
}

/// Sync search allowing up to `max_mismatches` bit errors over the whole
/// 24-bit preamble. Hits are reported in ascending offset order; when both
/// sync words match within the budget the one with fewer mismatches wins
/// (normal on a tie). Overlapping hits are all reported.
pub fn find_sync_tolerant(stream: &[u8], max_mismatches: usize) -> Vec<SyncHit> {
    let mut hits = Vec::new();
    if stream.len() < PREAMBLE_BITS {
        return hits;
    }
    for offset in 0..=stream.len() - PREAMBLE_BITS {
        let window = &stream[offset..offset + PREAMBLE_BITS];
        let ones_err = window[..15].iter().filter(|&&b| b == 0).count();
        if ones_err > max_mismatches {
            continue;
        }
        let word = &window[15..24];
        let normal_err: usize = word
            .iter()
            .zip(SYNC_NORMAL.iter())
            .filter(|(a, b)| a != b)
            .count();
        let test_err: usize = word
            .iter()
            .zip(SYNC_SELF_TEST.iter())
            .filter(|(a, b)| a != b)
            .count();
        let (err, mode) = if normal_err <= test_err {
            (normal_err, BeaconMode::Normal)
        } else {
            (test_err, BeaconMode::SelfTest)
        };
        if ones_err + err <= max_mismatches {
            hits.push(SyncHit { offset, mode });
        }
    }
    hits
}
