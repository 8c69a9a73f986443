# Operations: polynomial core, parametrization, inverse, verification
