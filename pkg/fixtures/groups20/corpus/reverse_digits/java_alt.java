static int reverseDigits(int n) {
    String text = Integer.toString(n < 0 ? -n : n);
    int rev = 0;
    for (int i = text.length() - 1; i >= 0; i--) {
        rev = rev * 10 + (text.charAt(i) - '0');
    }
    return n < 0 ? -rev : rev;
}
