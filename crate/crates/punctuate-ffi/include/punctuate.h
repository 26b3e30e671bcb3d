/* C ABI for the punctuate toolkit. Generated by cbindgen; do not edit. */

#ifndef PUNCTUATE_H
#define PUNCTUATE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of a fallible call. Families match the CLI exit codes.
 */
typedef enum PunctStatus {
  PUNCT_STATUS_OK = 0,
  PUNCT_STATUS_IO = 1,
  PUNCT_STATUS_PARSE = 2,
  PUNCT_STATUS_ALIGNMENT = 3,
  PUNCT_STATUS_SHAPE = 4,
  PUNCT_STATUS_NULL_ARGUMENT = 5,
  PUNCT_STATUS_INVALID_UTF8 = 6,
} PunctStatus;

/*
 Opaque handle to a trained tagger model.
 */
typedef struct PunctModel PunctModel;

/*
 Opaque handle to an evaluation report.
 */
typedef struct PunctReport PunctReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Last error message for this thread, owned by the library. The pointer
 stays valid until the next failing punctuate call on the same thread.
 */
const char *punct_last_error(void);

/*
 Library version as a static string; do not free.
 */
const char *punct_version(void);

/*
 Release a string returned by this library.

 # Safety
 `s` must be a pointer previously returned by a punctuate call, or null.
 */
void punct_string_free(char *s);

/*
 Fold runs of three full stops into the ellipsis character. Returns a
 new string, or null on error.

 # Safety
 `text` must be a valid NUL-terminated string or null.
 */
char *punct_normalize_ellipsis(const char *text);

/*
 Parse one `token:start-end` line and return the words joined by
 spaces, or null on parse error.

 # Safety
 `line` must be a valid NUL-terminated string or null.
 */
char *punct_strip_timestamps(const char *line);

/*
 Train a tagger on `count` in-file/expected-file pairs, concatenated in
 order. Pass `use_pauses = false` unless the in-files' timestamps
 should feed pause features. Returns a model handle, or null on error.

 # Safety
 `in_paths` and `expected_paths` must point to `count` valid
 NUL-terminated strings each.
 */
struct PunctModel *punct_model_train_files(const char *const *in_paths,
                                           const char *const *expected_paths,
                                           size_t count,
                                           uint32_t epochs,
                                           uint64_t seed,
                                           size_t context_radius,
                                           bool use_pauses);

/*
 Load a model file written by train. Returns null on error.

 # Safety
 `path` must be a valid NUL-terminated string or null.
 */
struct PunctModel *punct_model_load(const char *path);

/*
 Write a model to a file in the versioned text format.

 # Safety
 `model` must be a live handle from this library; `path` a valid
 NUL-terminated string.
 */
enum PunctStatus punct_model_save(const struct PunctModel *model, const char *path);

/*
 Number of features in the model; 0 for null.

 # Safety
 `model` must be a live handle from this library, or null.
 */
size_t punct_model_num_features(const struct PunctModel *model);

/*
 Release a model handle.

 # Safety
 `model` must be a handle from this library, not yet freed, or null.
 */
void punct_model_free(struct PunctModel *model);

/*
 Punctuate one `token:start-end` line; returns the punctuated text, or
 null on error. `chunk_size = 0` selects the default window config.

 # Safety
 `model` must be a live handle; `line` a valid NUL-terminated string.
 */
char *punct_model_predict_line(const struct PunctModel *model,
                               const char *line,
                               size_t chunk_size,
                               size_t overlap);

/*
 Punctuate a whole in-file and write the out-file of punctuated lines.
 `chunk_size = 0` selects the default window config.

 # Safety
 `model` must be a live handle; both paths valid NUL-terminated strings.
 */
enum PunctStatus punct_model_predict_file(const struct PunctModel *model,
                                          const char *in_path,
                                          const char *out_path,
                                          size_t chunk_size,
                                          size_t overlap);

/*
 Score an out-file against an expected-file, both 1:1 with the in-file.
 Returns a report handle, or null on error.

 # Safety
 All paths must be valid NUL-terminated strings.
 */
struct PunctReport *punct_evaluate_files(const char *expected_path,
                                         const char *out_path,
                                         const char *in_path);

/*
 Support-weighted F1 on the 0-100 scale; -1 for null.

 # Safety
 `report` must be a live handle from this library, or null.
 */
double punct_report_weighted_f1(const struct PunctReport *report);

/*
 F1 of one mark, indexed 0..6 in the order fullstop, comma, question
 mark, exclamation mark, hyphen, ellipsis; -1 on bad index or null.

 # Safety
 `report` must be a live handle from this library, or null.
 */
double punct_report_class_f1(const struct PunctReport *report, size_t class_index);

/*
 The report as a machine-readable key=value block; null for null input.

 # Safety
 `report` must be a live handle from this library, or null.
 */
char *punct_report_machine_block(const struct PunctReport *report);

/*
 Release a report handle.

 # Safety
 `report` must be a handle from this library, not yet freed, or null.
 */
void punct_report_free(struct PunctReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PUNCTUATE_H */
