static int clampTwelve(int k) {
    return k > 12 ? 12 : k;
}

static int factorialSmall(int n) {
    int result = 1;
    for (int i = 2; i <= clampTwelve(n); i++) {
        result *= i;
    }
    return result;
}
