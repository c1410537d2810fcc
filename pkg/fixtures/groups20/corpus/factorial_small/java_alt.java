static int factorialSmall(int n) {
    int k = n > 12 ? 12 : n;
    int result = 1;
    while (k > 1) {
        result *= k;
        k--;
    }
    return result;
}
