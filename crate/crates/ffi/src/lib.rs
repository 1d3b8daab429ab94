//! C ABI over the coopetition engine.
//!
//! Games are opaque `CoopGame` handles created by one of the `coop_game_*`
//! constructors and released with [`coop_game_free`]. Coalitions cross the
//! boundary as `uint32_t` bitmasks: bit `i` set means player `i + 1` is a
//! member. Every fallible call returns a [`CoopStatus`]; on failure a
//! message is available from [`coop_last_error`] on the same thread.
//! Strings returned by the library are released with [`coop_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;
use std::slice;

use coopetition::{
    compute_index, render, Coalition, Error, GameFile, IndexKind, Model, PlayerId, SimpleGame,
    ValidationOptions,
};

/// Opaque game handle.
pub struct CoopGame {
    game: SimpleGame,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoopStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGame = 4,
    OutOfRange = 5,
    InvalidArgument = 6,
    SizeGuard = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoopIndex {
    Coopetition = 0,
    Decisiveness = 1,
    Cooperative = 2,
    Competitive = 3,
    Attitude = 4,
    ShapleyGen = 5,
    Profitability = 6,
    Interaction = 7,
    InteractionIndicator = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoopModel {
    Banzhaf = 0,
    ShapleyOwen = 1,
}

impl From<CoopIndex> for IndexKind {
    fn from(i: CoopIndex) -> Self {
        match i {
            CoopIndex::Coopetition => IndexKind::Coopetition,
            CoopIndex::Decisiveness => IndexKind::Decisiveness,
            CoopIndex::Cooperative => IndexKind::Cooperative,
            CoopIndex::Competitive => IndexKind::Competitive,
            CoopIndex::Attitude => IndexKind::Attitude,
            CoopIndex::ShapleyGen => IndexKind::ShapleyGen,
            CoopIndex::Profitability => IndexKind::Profitability,
            CoopIndex::Interaction => IndexKind::Interaction,
            CoopIndex::InteractionIndicator => IndexKind::InteractionIndicator,
        }
    }
}

impl From<CoopModel> for Model {
    fn from(m: CoopModel) -> Self {
        match m {
            CoopModel::Banzhaf => Model::Banzhaf,
            CoopModel::ShapleyOwen => Model::ShapleyOwen,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(CoopStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::PlayerOutOfRange { .. } | Error::TooManyPlayers(_) => CoopStatus::OutOfRange,
            Error::InvalidGame(_) | Error::MajorityQuota { .. } => CoopStatus::InvalidGame,
            Error::SizeGuard(_) => CoopStatus::SizeGuard,
            Error::Parse(_) => CoopStatus::ParseError,
            _ => CoopStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CoopStatus::NullPointer, format!("`{what}` is null"))
}

/// Runs `f`, records any failure or panic, and returns the status.
fn guard<F>(f: F) -> CoopStatus
where
    F: FnOnce() -> Result<(), Failure> + UnwindSafe,
{
    match catch_unwind(f) {
        Ok(Ok(())) => CoopStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            CoopStatus::Panic
        }
    }
}

unsafe fn publish(game: SimpleGame, out: *mut *mut CoopGame) {
    *out = Box::into_raw(Box::new(CoopGame { game }));
}

unsafe fn game_ref<'a>(game: *const CoopGame) -> Result<&'a SimpleGame, Failure> {
    game.as_ref().map(|g| &g.game).ok_or_else(|| null("game"))
}

fn coalition(game: &SimpleGame, bits: u32) -> Result<Coalition, Failure> {
    let c = Coalition::from_bits(bits);
    game.check_coalition(c)?;
    Ok(c)
}

/// Builds a game from the JSON game-file format.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer to
/// writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn coop_game_from_json(
    json: *const c_char,
    allow_weak_quota: bool,
    out: *mut *mut CoopGame,
) -> CoopStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Failure(CoopStatus::InvalidUtf8, e.to_string()))?;
        let game = GameFile::parse(text)?.into_game(ValidationOptions { allow_weak_quota })?;
        publish(game, out);
        Ok(())
    })
}

/// Builds a game on `n` players from its minimal winning coalitions, given
/// as `len` bitmasks.
///
/// # Safety
/// `masks` must point to `len` readable values (it may be null when `len`
/// is 0) and `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn coop_game_from_mwc(
    n: u32,
    masks: *const u32,
    len: usize,
    out: *mut *mut CoopGame,
) -> CoopStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let masks = if len == 0 {
            &[][..]
        } else if masks.is_null() {
            return Err(null("masks"));
        } else {
            slice::from_raw_parts(masks, len)
        };
        let sets = masks.iter().map(|&m| Coalition::from_bits(m)).collect();
        publish(SimpleGame::from_minimal_winning(n as usize, sets)?, out);
        Ok(())
    })
}

/// Builds a weighted majority game with one weight per player.
///
/// # Safety
/// `weights` must point to `n` readable values and `out` must be valid for
/// one write.
#[no_mangle]
pub unsafe extern "C" fn coop_game_weighted(
    weights: *const u64,
    n: usize,
    quota: u64,
    out: *mut *mut CoopGame,
) -> CoopStatus {
    guard(|| {
        if weights.is_null() {
            return Err(null("weights"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let weights = slice::from_raw_parts(weights, n).to_vec();
        publish(SimpleGame::weighted(weights, quota)?, out);
        Ok(())
    })
}

/// Builds the apex game on `n` players with apex player `apex` (1-based).
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn coop_game_apex(n: u32, apex: u32, out: *mut *mut CoopGame) -> CoopStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let a = PlayerId::new(apex as usize)?;
        publish(SimpleGame::apex(n as usize, a)?, out);
        Ok(())
    })
}

/// Builds the symmetric majority game on `n` players with quota `quota`.
/// Quotas not above `n / 2` are rejected unless `allow_weak_quota` is set.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn coop_game_majority(
    n: u32,
    quota: u32,
    allow_weak_quota: bool,
    out: *mut *mut CoopGame,
) -> CoopStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let game = if allow_weak_quota {
            SimpleGame::majority_relaxed(n as usize, quota as usize)?
        } else {
            SimpleGame::majority(n as usize, quota as usize)?
        };
        publish(game, out);
        Ok(())
    })
}

/// Releases a game. Null is ignored.
///
/// # Safety
/// `game` must be null or a handle from a `coop_game_*` constructor that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn coop_game_free(game: *mut CoopGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

/// Number of players, or 0 for a null handle.
///
/// # Safety
/// `game` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn coop_game_players(game: *const CoopGame) -> u32 {
    game.as_ref().map_or(0, |g| g.game.n() as u32)
}

/// Writes 1 to `out` if `coalition` wins, 0 otherwise.
///
/// # Safety
/// `game` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn coop_game_wins(
    game: *const CoopGame,
    coalition_bits: u32,
    out: *mut u8,
) -> CoopStatus {
    guard(|| {
        let g = game_ref(game)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = g.evaluate(coalition(g, coalition_bits)?)?;
        Ok(())
    })
}

/// Computes an index of `coalition` and writes it as an exact `"p/q"` (or
/// `"p"`) string to `out`; free it with [`coop_string_free`]. `against` is
/// the outside coalition for the attitude and interaction-indicator indices
/// and must be null for every other index. `model` is ignored by indices
/// that do not depend on it.
///
/// # Safety
/// `game` must be a live handle, `against` null or valid for one read, and
/// `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn coop_index(
    game: *const CoopGame,
    index: CoopIndex,
    model: CoopModel,
    coalition_bits: u32,
    against: *const u32,
    out: *mut *mut c_char,
) -> CoopStatus {
    guard(|| {
        let g = game_ref(game)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = coalition(g, coalition_bits)?;
        let t = match against.as_ref() {
            Some(&bits) => Some(coalition(g, bits)?),
            None => None,
        };
        let value = compute_index(g, s, index.into(), model.into(), t)?;
        *out = CString::new(render(&value))
            .expect("digits only")
            .into_raw();
        Ok(())
    })
}

/// The message of the last failed call on this thread, or null. The caller
/// owns the copy and frees it with [`coop_string_free`].
#[no_mangle]
pub extern "C" fn coop_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |m| m.clone().into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn coop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
