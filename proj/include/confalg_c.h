#ifndef CONFALG_C_H
#define CONFALG_C_H

/* C interface to the conformal-algebra library. Manifests are opaque
 * handles; every command of the command-line tool is available through
 * confalg_run, and the returned status codes double as process exit
 * codes: 0 pass, 1 mathematical failure (the report carries the first
 * witness), 2 input error. */

#ifdef __cplusplus
extern "C" {
#endif

enum {
    CONFALG_OK = 0,
    CONFALG_CHECK_FAILED = 1,
    CONFALG_INPUT_ERROR = 2
};

typedef struct confalg_manifest confalg_manifest;

typedef struct confalg_options {
    const char* structure; /* structure name; NULL picks the first suitable */
    int up_to;             /* highest arity for homotopy checks; 0 = unset */
    int arity;             /* cochain arity for hh-ranks and random cochains */
    int dmax;              /* D-degree truncation; negative = unset */
    int lmax;              /* lambda-degree truncation; negative = unset */
    int tree_mode;         /* transfer: 0 auto, 1 binary, 2 general */
    const char* out_path;  /* write the resulting manifest here, if set */
    unsigned seed;         /* RNG seed where randomness is requested */
    int has_seed;          /* nonzero when seed was given */
} confalg_options;

/* Both constructors return NULL on failure and, when error is non-NULL,
 * place a message there (free with confalg_string_free). */
confalg_manifest* confalg_manifest_open(const char* path, char** error);
confalg_manifest* confalg_manifest_parse(const char* text, char** error);
char* confalg_manifest_serialize(const confalg_manifest* m);
void confalg_manifest_free(confalg_manifest* m);

/* Runs one command against a manifest; options may be NULL for all
 * defaults. *report receives the full report text. */
int confalg_run(const confalg_manifest* m, const char* command,
                const confalg_options* options, char** report);

/* NULL-terminated list of the supported command names. */
const char* const* confalg_commands(void);

void confalg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
