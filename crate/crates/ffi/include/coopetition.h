#ifndef COOPETITION_H
#define COOPETITION_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CoopIndex {
  COOP_INDEX_COOPETITION = 0,
  COOP_INDEX_DECISIVENESS = 1,
  COOP_INDEX_COOPERATIVE = 2,
  COOP_INDEX_COMPETITIVE = 3,
  COOP_INDEX_ATTITUDE = 4,
  COOP_INDEX_SHAPLEY_GEN = 5,
  COOP_INDEX_PROFITABILITY = 6,
  COOP_INDEX_INTERACTION = 7,
  COOP_INDEX_INTERACTION_INDICATOR = 8,
} CoopIndex;

typedef enum CoopModel {
  COOP_MODEL_BANZHAF = 0,
  COOP_MODEL_SHAPLEY_OWEN = 1,
} CoopModel;

typedef enum CoopStatus {
  COOP_STATUS_OK = 0,
  COOP_STATUS_NULL_POINTER = 1,
  COOP_STATUS_INVALID_UTF8 = 2,
  COOP_STATUS_PARSE_ERROR = 3,
  COOP_STATUS_INVALID_GAME = 4,
  COOP_STATUS_OUT_OF_RANGE = 5,
  COOP_STATUS_INVALID_ARGUMENT = 6,
  COOP_STATUS_SIZE_GUARD = 7,
  COOP_STATUS_PANIC = 8,
} CoopStatus;

/**
 * Opaque game handle.
 */
typedef struct CoopGame CoopGame;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a game from the JSON game-file format.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer to
 * writable storage for one handle.
 */
enum CoopStatus coop_game_from_json(const char *json, bool allow_weak_quota, struct CoopGame **out);

/**
 * Builds a game on `n` players from its minimal winning coalitions, given
 * as `len` bitmasks.
 *
 * # Safety
 * `masks` must point to `len` readable values (it may be null when `len`
 * is 0) and `out` must be valid for one write.
 */
enum CoopStatus coop_game_from_mwc(uint32_t n,
                                   const uint32_t *masks,
                                   uintptr_t len,
                                   struct CoopGame **out);

/**
 * Builds a weighted majority game with one weight per player.
 *
 * # Safety
 * `weights` must point to `n` readable values and `out` must be valid for
 * one write.
 */
enum CoopStatus coop_game_weighted(const uint64_t *weights,
                                   uintptr_t n,
                                   uint64_t quota,
                                   struct CoopGame **out);

/**
 * Builds the apex game on `n` players with apex player `apex` (1-based).
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum CoopStatus coop_game_apex(uint32_t n, uint32_t apex, struct CoopGame **out);

/**
 * Builds the symmetric majority game on `n` players with quota `quota`.
 * Quotas not above `n / 2` are rejected unless `allow_weak_quota` is set.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum CoopStatus coop_game_majority(uint32_t n,
                                   uint32_t quota,
                                   bool allow_weak_quota,
                                   struct CoopGame **out);

/**
 * Releases a game. Null is ignored.
 *
 * # Safety
 * `game` must be null or a handle from a `coop_game_*` constructor that has
 * not been freed.
 */
void coop_game_free(struct CoopGame *game);

/**
 * Number of players, or 0 for a null handle.
 *
 * # Safety
 * `game` must be null or a live handle.
 */
uint32_t coop_game_players(const struct CoopGame *game);

/**
 * Writes 1 to `out` if `coalition` wins, 0 otherwise.
 *
 * # Safety
 * `game` must be a live handle and `out` valid for one write.
 */
enum CoopStatus coop_game_wins(const struct CoopGame *game, uint32_t coalition_bits, uint8_t *out);

/**
 * Computes an index of `coalition` and writes it as an exact `"p/q"` (or
 * `"p"`) string to `out`; free it with [`coop_string_free`]. `against` is
 * the outside coalition for the attitude and interaction-indicator indices
 * and must be null for every other index. `model` is ignored by indices
 * that do not depend on it.
 *
 * # Safety
 * `game` must be a live handle, `against` null or valid for one read, and
 * `out` valid for one write.
 */
enum CoopStatus coop_index(const struct CoopGame *game,
                           enum CoopIndex index,
                           enum CoopModel model,
                           uint32_t coalition_bits,
                           const uint32_t *against,
                           char **out);

/**
 * The message of the last failed call on this thread, or null. The caller
 * owns the copy and frees it with [`coop_string_free`].
 */
char *coop_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library that has not been freed.
 */
void coop_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COOPETITION_H */
