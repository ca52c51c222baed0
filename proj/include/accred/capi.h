/* SPDX-License-Identifier: MIT */
#ifndef ACCRED_CAPI_H
#define ACCRED_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

/* C interface to the accreditation library. Functions returning int use 0
 * for success; on failure they return a nonzero code and, when err is
 * non-NULL, store a message the caller releases with accred_string_free.
 * Code 1 marks a configuration problem (line-anchored when it came from a
 * file), code 2 an execution failure. */

typedef struct accred_config accred_config;

/* Empty configuration with default values. Never fails. */
accred_config* accred_config_create(void);

/* Parses a flat key = value file; NULL on failure. */
accred_config* accred_config_load(const char* path, char** err);

/* Sets one key using the same names the file format accepts. */
int accred_config_set(accred_config* config, const char* key,
                      const char* value, char** err);

void accred_config_free(accred_config* config);

/* Runs one subcommand (accredit, oracle, diagnose, compare-bounds,
 * generate-traps). out_dir overrides the configured output directory when
 * non-NULL and non-empty. On success *summary receives a human-readable
 * result when summary is non-NULL. */
int accred_run(const accred_config* config, const char* command,
               const char* out_dir, char** summary, char** err);

/* Hoeffding trap count for accuracy theta at confidence alpha. */
int accred_required_traps(double theta, double alpha, int* v_out, char** err);

const char* accred_version(void);

void accred_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ACCRED_CAPI_H */
