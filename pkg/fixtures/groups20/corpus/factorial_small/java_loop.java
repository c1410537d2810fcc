static int factorialSmall(int n) {
    int result = 1;
    int top = n > 12 ? 12 : n;
    for (int i = 2; i <= top; i++) {
        result *= i;
    }
    return result;
}
