# Chunked sweep workers run under an executor
