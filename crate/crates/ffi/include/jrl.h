#ifndef JRL_H
#define JRL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum JrlStatus {
  JRL_STATUS_OK = 0,
  JRL_STATUS_NULL_POINTER = 1,
  JRL_STATUS_INVALID_UTF8 = 2,
  JRL_STATUS_BUFFER_TOO_SMALL = 3,
  JRL_STATUS_PANIC = 4,
  JRL_STATUS_SHAPE = 10,
  JRL_STATUS_NOT_ABELIAN_GROUP = 11,
  JRL_STATUS_NOT_ASSOCIATIVE = 12,
  JRL_STATUS_NO_IDENTITY = 13,
  JRL_STATUS_NOT_DISTRIBUTIVE = 14,
  JRL_STATUS_NO_INVERSE = 15,
  JRL_STATUS_UNKNOWN_NAME = 16,
  JRL_STATUS_CONTEXT_MISMATCH = 17,
  JRL_STATUS_EMPTY_SEQUENCE = 18,
  JRL_STATUS_INVALID_EXPONENT = 19,
  JRL_STATUS_TOO_LARGE = 20,
  JRL_STATUS_PARSE_ERROR = 21,
  JRL_STATUS_IO = 22,
} JrlStatus;

/*
 Opaque group handle.
 */
typedef struct JrlGroup JrlGroup;

/*
 Opaque ring handle.
 */
typedef struct JrlRing JrlRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Looks up a built-in ring such as `"Z4"` or `"M2(F2)"`.
 */
enum JrlStatus jrl_ring_builtin(const char *name, struct JrlRing **out);

/*
 Builds and validates a ring from row-major `order * order` tables.
 */
enum JrlStatus jrl_ring_from_tables(const char *name,
                                    size_t order,
                                    const size_t *add,
                                    const size_t *mul,
                                    size_t zero,
                                    size_t one,
                                    struct JrlRing **out);

/*
 Parses and validates a ring file.
 */
enum JrlStatus jrl_ring_parse_file(const char *path, struct JrlRing **out);

/*
 Releases a ring handle; null is ignored.
 */
void jrl_ring_free(struct JrlRing *ring);

/*
 Number of elements, or 0 for a null handle.
 */
size_t jrl_ring_order(const struct JrlRing *ring);

/*
 Additive order of the identity, or 0 for a null handle.
 */
size_t jrl_ring_characteristic(const struct JrlRing *ring);

bool jrl_ring_is_commutative(const struct JrlRing *ring);

/*
 Looks up a built-in group such as `"D4"` or `"C2xQ8"`.
 */
enum JrlStatus jrl_group_builtin(const char *name, struct JrlGroup **out);

/*
 Builds and validates a group from a row-major `order * order` table.
 */
enum JrlStatus jrl_group_from_table(const char *name,
                                    size_t order,
                                    const size_t *mul,
                                    size_t identity,
                                    struct JrlGroup **out);

/*
 Parses and validates a group file.
 */
enum JrlStatus jrl_group_parse_file(const char *path, struct JrlGroup **out);

/*
 Releases a group handle; null is ignored.
 */
void jrl_group_free(struct JrlGroup *group);

size_t jrl_group_order(const struct JrlGroup *group);

bool jrl_group_is_abelian(const struct JrlGroup *group);

/*
 Order of the derived subgroup, or 0 for a null handle.
 */
size_t jrl_group_derived_order(const struct JrlGroup *group);

/*
 Order of the centre, or 0 for a null handle.
 */
size_t jrl_group_center_order(const struct JrlGroup *group);

/*
 Structural prediction for `R[G]`.

 `*index` receives 2, 3 or 4, or 0 when no clause applies (index above 4 or
 not nilpotent). The clause tag is copied into `tag` (NUL-terminated,
 truncated to `tag_len`); if `tag` is too small the call still sets `*index`
 and returns `BufferTooSmall`. `tag` may be null when `tag_len` is 0.
 */
enum JrlStatus jrl_classify(const struct JrlRing *ring,
                            const struct JrlGroup *group,
                            uint32_t *index,
                            char *tag,
                            size_t tag_len);

/*
 Least `n` in `2..=max_n` at which every degree-`n` left-normed circle
 product of `R[G]` vanishes; `*index` is 0 if there is none.
 */
enum JrlStatus jrl_minimal_jordan_index(const struct JrlRing *ring,
                                        const struct JrlGroup *group,
                                        size_t max_n,
                                        uint32_t *index);

/*
 Whether every degree-`n` left-normed circle product of `R[G]` vanishes.
 */
enum JrlStatus jrl_vanishes(const struct JrlRing *ring,
                            const struct JrlGroup *group,
                            size_t n,
                            bool *out);

/*
 Copies the calling thread's last error message into `buf` (NUL-terminated,
 truncated to `len`) and returns the buffer size needed for all of it. The
 message is empty after a successful call.
 */
size_t jrl_last_error_message(char *buf, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JRL_H */
