import java.util.ArrayList;
import java.util.List;

class EvensList {
    static List<Integer> evensList(int n) {
        List<Integer> found = new ArrayList<Integer>();
        for (int i = 0; i < n; i++) {
            if (i % 2 == 0) {
                found.add(i);
            }
        }
        return found;
    }
}
