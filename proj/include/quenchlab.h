/* C interface to the quenching-lab core: opaque config handles, status
 * codes mirroring the process exit contract, and JSON report strings. */
#ifndef QUENCHLAB_H
#define QUENCHLAB_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes shared with the CLI exit contract. */
enum {
  QLB_OK = 0,             /* success */
  QLB_ERR_CONFIG = 1,     /* unreadable/malformed/invalid configuration */
  QLB_ERR_HYPOTHESIS = 2, /* a checked model hypothesis fails */
  QLB_ERR_RUNTIME = 3,    /* solver stall, unreachable target, I/O failure */
  QLB_ERR_ARGUMENT = 4    /* null or otherwise unusable call arguments */
};

typedef struct qlb_config qlb_config;

/* Parse a configuration file / text buffer into a handle.  On success
 * writes the handle and returns QLB_OK; the caller releases it with
 * qlb_config_free.  On failure returns QLB_ERR_CONFIG and leaves a
 * message in qlb_last_error(). */
int qlb_config_load(const char* path, qlb_config** out);
int qlb_config_load_text(const char* text, qlb_config** out);

/* Override the artifact directory recorded in the configuration. */
int qlb_config_set_output_dir(qlb_config* cfg, const char* dir);

void qlb_config_free(qlb_config* cfg);

/* Commands.  Each returns a status code from the enum above and, when
 * out_json is non-null, stores a heap-allocated JSON report (UTF-8,
 * newline-terminated) that the caller releases with qlb_string_free.
 * A report is produced for command-level failures too (status 2/3);
 * out_json is left null only for argument errors. */
int qlb_validate_ic(const qlb_config* cfg, char** out_json);
int qlb_run(const qlb_config* cfg, char** out_json);
int qlb_convergence(const qlb_config* cfg, char** out_json);

void qlb_string_free(char* s);

/* Message describing the most recent failure on the calling thread;
 * empty string when the last call succeeded. */
const char* qlb_last_error(void);

/* Library version, e.g. "1.0.0". */
const char* qlb_version(void);

#ifdef __cplusplus
}
#endif

#endif /* QUENCHLAB_H */
